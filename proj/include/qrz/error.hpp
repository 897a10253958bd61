#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrz {

enum class errc {
    not_prime,
    bad_residue_class,
    out_of_family_range,
    no_valid_k,
    bad_modulus,
    template_needs_m4,
    shape_mismatch,
    not_a_unit,
    not_coprime,
    not_a_divisor,
    not_coprime_cofactor,
    precondition_sign_mismatch,
    degenerate_coefficients,
    no_case_applies,
    ambiguous_case,
    bad_position,
    budget_exceeded,
    no_nonzero_words,
    parse_error,
};

constexpr std::string_view to_string(errc e) {
    switch (e) {
        case errc::not_prime: return "NotPrime";
        case errc::bad_residue_class: return "BadResidueClass";
        case errc::out_of_family_range: return "OutOfFamilyRange";
        case errc::no_valid_k: return "NoValidK";
        case errc::bad_modulus: return "BadModulus";
        case errc::template_needs_m4: return "TemplateNeedsM4";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_a_unit: return "NotAUnit";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::not_coprime_cofactor: return "NotCoprimeCofactor";
        case errc::precondition_sign_mismatch: return "PreconditionSignMismatch";
        case errc::degenerate_coefficients: return "DegenerateCoefficients";
        case errc::no_case_applies: return "NoCaseApplies";
        case errc::ambiguous_case: return "AmbiguousCase";
        case errc::bad_position: return "BadPosition";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::no_nonzero_words: return "NoNonzeroWords";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace qrz
