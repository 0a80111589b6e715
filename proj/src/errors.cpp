#include "a1deg/errors.hpp"

namespace a1deg {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::characteristic_two: return "CharacteristicTwo";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::irreducibility_violated: return "IrreducibilityViolated";
    case errc::zero_argument: return "ZeroArgument";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_vanishing: return "NotVanishing";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_separable_residue: return "NotSeparableResidue";
    case errc::not_monic: return "NotMonic";
    case errc::not_an_extension: return "NotAnExtension";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::zero_leading: return "ZeroLeading";
    case errc::degenerate_form: return "Degenerate";
    case errc::not_a_place: return "NotAPlace";
    case errc::not_reduced: return "NotReduced";
    case errc::zero_pair: return "ZeroPair";
    case errc::inseparable_extension: return "InseparableExtension";
    case errc::zero_scale: return "ZeroScale";
    case errc::not_isolated: return "NotIsolated";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace a1deg
