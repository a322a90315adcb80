#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nottingham {

enum class errc {
    not_prime,
    zero_inverse,
    mismatched_context,
    not_a_unit,
    nonzero_constant,
    not_invertible,
    wrong_characteristic,
    bad_root,
    not_coprime,
    bad_truncation,
    bad_precision,
    zero_parameter,
    not_in_group,
    parse_error,
};

constexpr std::string_view to_string(errc c) noexcept
{
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::mismatched_context: return "MismatchedContext";
    case errc::not_a_unit: return "NotAUnit";
    case errc::nonzero_constant: return "NonzeroConstant";
    case errc::not_invertible: return "NotInvertible";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::bad_root: return "BadRoot";
    case errc::not_coprime: return "NotCoprime";
    case errc::bad_truncation: return "BadTruncation";
    case errc::bad_precision: return "BadPrecision";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::not_in_group: return "NotInGroup";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace nottingham
