#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

enum class errc {
    cartan_mismatch,
    infinite_weyl,
    pi_invalid,
    no_fundamental_coweights,
    not_dominant,
    not_regular,
    not_regular_dominant,
    higher_order_pole,
    support_violation,
    non_polynomial,
    rank_unsupported,
    p_too_small,
    not_generic,
    oracle_gap,
    schema_error,
    invariant_violation,
    out_of_region,
    singular_solve,
    genericity_violation,
    missing_lower_defect,
    region_not_generic,
    table_gap,
    not_in_support_cone,
    usage,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::cartan_mismatch: return "CartanMismatch";
        case errc::infinite_weyl: return "InfiniteWeyl";
        case errc::pi_invalid: return "PiInvalid";
        case errc::no_fundamental_coweights: return "NoFundamentalCoweights";
        case errc::not_dominant: return "NotDominant";
        case errc::not_regular: return "NotRegular";
        case errc::not_regular_dominant: return "NotRegularDominant";
        case errc::higher_order_pole: return "HigherOrderPole";
        case errc::support_violation: return "SupportViolation";
        case errc::non_polynomial: return "NonPolynomial";
        case errc::rank_unsupported: return "RankUnsupported";
        case errc::p_too_small: return "PTooSmall";
        case errc::not_generic: return "NotGeneric";
        case errc::oracle_gap: return "OracleGap";
        case errc::schema_error: return "SchemaError";
        case errc::invariant_violation: return "InvariantViolation";
        case errc::out_of_region: return "OutOfRegion";
        case errc::singular_solve: return "SingularSolve";
        case errc::genericity_violation: return "GenericityViolation";
        case errc::missing_lower_defect: return "MissingLowerDefect";
        case errc::region_not_generic: return "RegionNotGeneric";
        case errc::table_gap: return "TableGap";
        case errc::not_in_support_cone: return "NotInSupportCone";
        case errc::usage: return "Usage";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    errc code;
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void check(bool cond, errc c, const std::string& msg) {
    if (!cond) fail(c, msg);
}

}  // namespace alcove
