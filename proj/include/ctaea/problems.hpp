#pragma once

#include <string>
#include <vector>

#include "ctaea/core.hpp"

namespace ctaea {

/// Parameters of one angular CTP constraint:
///   cos(theta)(f2 - e) - sin(theta) f1 >=
///   a |sin(b pi (sin(theta)(f2 - e) + cos(theta) f1)^c)|^d
struct CtpParams {
    double theta = 0;
    double a = 0;
    double b = 0;
    double c = 0;
    double d = 0;
    double e = 0;
};

/// Biobjective CTP instance (id 1..8). f1 = x1 in [0,1]; f2 rides on a
/// Rastrigin-form distance function over the remaining n-1 variables in
/// [-5,5], whose minimum is 1. CTP1 carries the iteratively constructed
/// exponential constraint pair, CTP2..7 one angular constraint, CTP8 two.
ProblemSpec make_ctp(int id, std::size_t n = 10);

/// Constraint parameter tuple(s) of a CTP instance, exposed for tests and
/// front generation.
std::vector<CtpParams> ctp_constraints(int id);

enum class DcFamily { dc1, dc2, dc3 };
enum class DtlzBase { dtlz1, dtlz3 };

struct DcDtlzSpec {
    DcFamily family = DcFamily::dc1;
    DtlzBase base = DtlzBase::dtlz1;
    std::size_t m = 3;
    double a = 3.0; ///< constraint frequency
    double b = 0.5; ///< constraint offset (0.9 for the dc2 family)
};

DcDtlzSpec dc_dtlz_defaults(DcFamily family, DtlzBase base, std::size_t m);

/// DC-constrained DTLZ instance over [0,1]^n with n = m + k - 1
/// (k = 5 for the DTLZ1 base, 10 for DTLZ3). dc1 restricts x1 to bands,
/// dc2 squeezes the distance function into a narrow sliver near its
/// optimum, dc3 bands every position variable and the distance function.
ProblemSpec make_dc_dtlz(const DcDtlzSpec& spec, std::size_t n = 0);

/// Factory keyed by the CLI identifiers: ctp1..ctp8, dc{1,2,3}_dtlz{1,3}.
/// m or n of 0 picks the conventional default.
ProblemSpec make_problem(const std::string& name, std::size_t m = 0, std::size_t n = 0);

std::vector<std::string> problem_names();

/// Sample of the feasible Pareto-optimal front used as the IGD reference.
struct ReferenceFront {
    std::vector<std::vector<double>> points;
    std::size_t resolution = 0;
};

/// 1000 points for m <= 3, 5000 for larger m.
std::size_t default_front_resolution(std::size_t m);

/// Builds the reference set for a known problem: CTP fronts scan each f1
/// column of the attainable region upward to the first feasible objective
/// vector and keep the nondominated ones; DC-DTLZ fronts sample the base
/// front analytically and keep the constraint-feasible points. The result
/// is downsampled uniformly to the requested resolution.
ReferenceFront reference_front(const ProblemSpec& problem, std::size_t resolution);

/// Plain-text persistence: one objective vector per line, space-separated,
/// round-trip exact.
void save_front(const ReferenceFront& front, const std::string& path);
ReferenceFront load_front(const std::string& path);

} // namespace ctaea
