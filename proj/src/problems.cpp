#include "ctaea/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ctaea/decomposition.hpp"

namespace ctaea {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared CTP distance function: Rastrigin form over x2..xn in [-5,5],
// minimum 1 when every tail variable sits at 0.
double ctp_distance(std::span<const double> x) {
    double g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i)
        g += x[i] * x[i] - 10.0 * std::cos(2.0 * kPi * x[i]);
    return g;
}

double angular_constraint(const CtpParams& p, double f1, double f2) {
    double v = std::cos(p.theta) * (f2 - p.e) - std::sin(p.theta) * f1;
    double u = std::sin(p.theta) * (f2 - p.e) + std::cos(p.theta) * f1;
    return v - p.a * std::pow(std::abs(std::sin(p.b * kPi * std::pow(u, p.c))), p.d);
}

// CTP1's exponential constraint pair, built by the standard iteration.
struct Ctp1Constants {
    double a1, b1, a2, b2;
};

Ctp1Constants ctp1_constants() {
    constexpr int J = 2;
    double a[J + 1] = {1.0}, b[J + 1] = {1.0};
    double step = 1.0 / (J + 1);
    double alpha = step;
    for (int j = 0; j < J; ++j) {
        double beta = a[j] * std::exp(-b[j] * alpha);
        a[j + 1] = 0.5 * (a[j] + beta);
        b[j + 1] = -std::log(beta / a[j + 1]) / alpha;
        alpha += step;
    }
    return {a[1], b[1], a[2], b[2]};
}

std::vector<double> ctp_bounds_lower(std::size_t n) {
    std::vector<double> lo(n, -5.0);
    lo[0] = 0.0;
    return lo;
}

std::vector<double> ctp_bounds_upper(std::size_t n) {
    std::vector<double> hi(n, 5.0);
    hi[0] = 1.0;
    return hi;
}

} // namespace

std::vector<CtpParams> ctp_constraints(int id) {
    // Parameter tuples (theta, a, b, c, d, e) as published for the suite.
    switch (id) {
    case 2: return {{-0.2 * kPi, 0.2, 10.0, 1.0, 6.0, 1.0}};
    case 3: return {{-0.2 * kPi, 0.1, 10.0, 1.0, 0.5, 1.0}};
    case 4: return {{-0.2 * kPi, 0.75, 10.0, 1.0, 0.5, 1.0}};
    case 5: return {{-0.2 * kPi, 0.1, 10.0, 2.0, 0.5, 1.0}};
    case 6: return {{0.1 * kPi, 40.0, 0.5, 1.0, 2.0, -2.0}};
    case 7: return {{-0.05 * kPi, 40.0, 5.0, 1.0, 6.0, 0.0}};
    case 8:
        return {{0.1 * kPi, 40.0, 0.5, 1.0, 2.0, -2.0},
                {-0.05 * kPi, 40.0, 2.0, 1.0, 6.0, 0.0}};
    default:
        throw ConfigError("ctp_constraints: no angular constraints for ctp" +
                          std::to_string(id));
    }
}

ProblemSpec make_ctp(int id, std::size_t n) {
    if (id < 1 || id > 8)
        throw ConfigError("unknown CTP instance ctp" + std::to_string(id));
    if (n < 2)
        throw ConfigError("CTP needs n >= 2");

    ProblemSpec spec;
    spec.name = "ctp" + std::to_string(id);
    spec.n = n;
    spec.m = 2;
    spec.ell = 0;
    spec.lower = ctp_bounds_lower(n);
    spec.upper = ctp_bounds_upper(n);

    if (id == 1) {
        spec.q = 2;
        Ctp1Constants k = ctp1_constants();
        spec.evaluator = [k](std::span<const double> x) {
            double g = ctp_distance(x);
            double f1 = x[0];
            double f2 = g * std::exp(-f1 / g);
            Evaluation eval;
            eval.f = {f1, f2};
            eval.g = {f2 - k.a1 * std::exp(-k.b1 * f1), f2 - k.a2 * std::exp(-k.b2 * f1)};
            return eval;
        };
        return spec;
    }

    std::vector<CtpParams> constraints = ctp_constraints(id);
    spec.q = constraints.size();
    spec.evaluator = [constraints](std::span<const double> x) {
        double g = ctp_distance(x);
        double f1 = x[0];
        double f2 = g * (1.0 - f1 / g);
        Evaluation eval;
        eval.f = {f1, f2};
        eval.g.reserve(constraints.size());
        for (const auto& p : constraints)
            eval.g.push_back(angular_constraint(p, f1, f2));
        return eval;
    };
    return spec;
}

DcDtlzSpec dc_dtlz_defaults(DcFamily family, DtlzBase base, std::size_t m) {
    DcDtlzSpec spec;
    spec.family = family;
    spec.base = base;
    spec.m = m;
    spec.a = 3.0;
    spec.b = family == DcFamily::dc2 ? 0.9 : 0.5;
    return spec;
}

namespace {

std::size_t dtlz_tail(DtlzBase base) {
    return base == DtlzBase::dtlz1 ? 5 : 10;
}

double dtlz_distance(std::span<const double> x, std::size_t m) {
    double g = 0.0;
    for (std::size_t i = m - 1; i < x.size(); ++i) {
        double t = x[i] - 0.5;
        g += t * t - std::cos(20.0 * kPi * t);
    }
    return 100.0 * (static_cast<double>(x.size() - m + 1) + g);
}

std::vector<double> dtlz_objectives(DtlzBase base, std::span<const double> x, std::size_t m,
                                    double g) {
    std::vector<double> f(m);
    if (base == DtlzBase::dtlz1) {
        for (std::size_t i = 0; i < m; ++i) {
            double value = 0.5 * (1.0 + g);
            for (std::size_t j = 0; j + i + 1 < m; ++j)
                value *= x[j];
            if (i > 0)
                value *= 1.0 - x[m - 1 - i];
            f[i] = value;
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            double value = 1.0 + g;
            for (std::size_t j = 0; j + i + 1 < m; ++j)
                value *= std::cos(0.5 * kPi * x[j]);
            if (i > 0)
                value *= std::sin(0.5 * kPi * x[m - 1 - i]);
            f[i] = value;
        }
    }
    return f;
}

const char* family_tag(DcFamily family) {
    switch (family) {
    case DcFamily::dc1: return "dc1";
    case DcFamily::dc2: return "dc2";
    case DcFamily::dc3: return "dc3";
    }
    return "?";
}

} // namespace

ProblemSpec make_dc_dtlz(const DcDtlzSpec& dc, std::size_t n) {
    static constexpr std::size_t supported_m[] = {3, 5, 8, 10, 15};
    if (std::find(std::begin(supported_m), std::end(supported_m), dc.m) ==
        std::end(supported_m))
        throw ConfigError("dc-dtlz supports m in {3,5,8,10,15}, got m = " +
                          std::to_string(dc.m));
    if (dc.a <= 0.0 || dc.b <= 0.0)
        throw ConfigError("dc-dtlz constraint parameters must be positive");
    const std::size_t conventional = dc.m + dtlz_tail(dc.base) - 1;
    if (n == 0)
        n = conventional;
    if (n != conventional)
        throw ConfigError("dc-dtlz expects n = m + k - 1 = " + std::to_string(conventional));

    ProblemSpec spec;
    spec.name = std::string(family_tag(dc.family)) + "_" +
                (dc.base == DtlzBase::dtlz1 ? "dtlz1" : "dtlz3");
    spec.n = n;
    spec.m = dc.m;
    spec.ell = 0;
    spec.lower.assign(n, 0.0);
    spec.upper.assign(n, 1.0);

    const std::size_t m = dc.m;
    const double a = dc.a;
    const double b = dc.b;
    const DtlzBase base = dc.base;

    switch (dc.family) {
    case DcFamily::dc1:
        // Feasibility bands along the first position variable.
        spec.q = 1;
        spec.evaluator = [m, a, b, base](std::span<const double> x) {
            double g = dtlz_distance(x, m);
            Evaluation eval;
            eval.f = dtlz_objectives(base, x, m, g);
            eval.g = {std::cos(a * kPi * x[0]) + b};
            return eval;
        };
        break;
    case DcFamily::dc2:
        // A narrow sliver around the distance optimum stays feasible; the
        // cosine term plants deceptive violation minima on the way there.
        spec.q = 2;
        spec.evaluator = [m, a, b, base](std::span<const double> x) {
            double g = dtlz_distance(x, m);
            Evaluation eval;
            eval.f = dtlz_objectives(base, x, m, g);
            eval.g = {std::cos(a * kPi * g) - b, std::exp(-g) - b};
            return eval;
        };
        break;
    case DcFamily::dc3:
        // Bands on every position variable plus bands along the distance
        // function.
        spec.q = m;
        spec.evaluator = [m, a, b, base](std::span<const double> x) {
            double g = dtlz_distance(x, m);
            Evaluation eval;
            eval.f = dtlz_objectives(base, x, m, g);
            eval.g.reserve(m);
            for (std::size_t j = 0; j + 1 < m; ++j)
                eval.g.push_back(std::cos(a * kPi * x[j]) - b);
            eval.g.push_back(std::cos(a * kPi * g) - b);
            return eval;
        };
        break;
    }
    return spec;
}

ProblemSpec make_problem(const std::string& name, std::size_t m, std::size_t n) {
    if (name.starts_with("ctp") && name.size() == 4 && name[3] >= '1' && name[3] <= '8') {
        if (m != 0 && m != 2)
            throw ConfigError("CTP problems are biobjective; drop the m override");
        return make_ctp(name[3] - '0', n == 0 ? 10 : n);
    }
    for (DcFamily family : {DcFamily::dc1, DcFamily::dc2, DcFamily::dc3})
        for (DtlzBase base : {DtlzBase::dtlz1, DtlzBase::dtlz3}) {
            std::string candidate = std::string(family_tag(family)) + "_" +
                                    (base == DtlzBase::dtlz1 ? "dtlz1" : "dtlz3");
            if (name == candidate)
                return make_dc_dtlz(dc_dtlz_defaults(family, base, m == 0 ? 3 : m), n);
        }
    throw ConfigError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (int id = 1; id <= 8; ++id)
        names.push_back("ctp" + std::to_string(id));
    for (const char* family : {"dc1", "dc2", "dc3"})
        for (const char* base : {"dtlz1", "dtlz3"})
            names.push_back(std::string(family) + "_" + base);
    return names;
}

std::size_t default_front_resolution(std::size_t m) {
    return m <= 3 ? 1000 : 5000;
}

namespace {

std::vector<std::vector<double>> downsample(std::vector<std::vector<double>> points,
                                            std::size_t target) {
    if (points.size() <= target)
        return points;
    std::vector<std::vector<double>> kept;
    kept.reserve(target);
    for (std::size_t i = 0; i < target; ++i)
        kept.push_back(std::move(points[i * points.size() / target]));
    return kept;
}

// CTP fronts: walk each f1 column of the attainable objective region
// upward from the distance-optimal floor to the first constraint-feasible
// f2, refine the crossing by bisection and keep the nondominated columns.
std::vector<std::vector<double>> ctp_front(int id, std::size_t resolution) {
    Ctp1Constants k1 = ctp1_constants();
    std::vector<CtpParams> angular;
    if (id != 1)
        angular = ctp_constraints(id);

    auto feasible = [&](double f1, double f2) {
        if (id == 1)
            return f2 - k1.a1 * std::exp(-k1.b1 * f1) >= 0.0 &&
                   f2 - k1.a2 * std::exp(-k1.b2 * f1) >= 0.0;
        for (const auto& p : angular)
            if (angular_constraint(p, f1, f2) < 0.0)
                return false;
        return true;
    };
    auto floor_f2 = [&](double f1) {
        return id == 1 ? std::exp(-f1) : 1.0 - f1;
    };

    const std::size_t columns = std::max<std::size_t>(2 * resolution, 2000) + 1;
    const double step = 0.002;
    const double ceiling = 50.0;

    std::vector<std::vector<double>> points;
    for (std::size_t c = 0; c < columns; ++c) {
        double f1 = static_cast<double>(c) / static_cast<double>(columns - 1);
        double lo = floor_f2(f1);
        if (feasible(f1, lo)) {
            points.push_back({f1, lo});
            continue;
        }
        double f2 = lo;
        bool bracketed = false;
        while (f2 < lo + ceiling) {
            double next = f2 + step;
            if (feasible(f1, next)) {
                bracketed = true;
                break;
            }
            f2 = next;
        }
        if (!bracketed)
            continue;
        double bad = f2, good = f2 + step;
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (bad + good);
            (feasible(f1, mid) ? good : bad) = mid;
        }
        points.push_back({f1, good});
    }

    auto flags = nondominated_flags(points);
    std::vector<std::vector<double>> front;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (flags[i])
            front.push_back(std::move(points[i]));
    return downsample(std::move(front), resolution);
}

// Position variables of a distance-optimal DTLZ1 point realizing f.
std::vector<double> dtlz1_positions(std::span<const double> f) {
    const std::size_t m = f.size();
    std::vector<double> x(m - 1, 0.0);
    double head = 0.5; // 0.5 * prod of the first j position variables
    for (std::size_t j = 0; j + 1 < m; ++j) {
        double next = head - f[m - 1 - j];
        if (head <= 1e-15) {
            x[j] = 0.0;
            head = 0.0;
            continue;
        }
        x[j] = std::clamp(next / head, 0.0, 1.0);
        head = next;
    }
    return x;
}

std::vector<double> dtlz3_positions(std::span<const double> f) {
    const std::size_t m = f.size();
    std::vector<double> x(m - 1, 0.0);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        double rest = 0.0;
        for (std::size_t i = 0; i + j + 1 < m; ++i)
            rest += f[i] * f[i];
        x[j] = std::clamp(std::atan2(f[m - 1 - j], std::sqrt(rest)) / (0.5 * kPi), 0.0, 1.0);
    }
    return x;
}

std::vector<std::vector<double>> simplex_lattice_points(std::size_t m, unsigned h,
                                                        double scale) {
    // Reuse the weight-vector lattice as a front sampler.
    WeightVectorSet lattice = das_dennis_weights(m, h);
    std::vector<std::vector<double>> points = std::move(lattice.vectors);
    for (auto& p : points)
        for (double& v : p)
            v *= scale;
    return points;
}

std::vector<std::vector<double>> dc_dtlz_front(const DcDtlzSpec& dc, std::size_t resolution) {
    auto position_feasible = [&](std::span<const double> x) {
        switch (dc.family) {
        case DcFamily::dc1:
            return std::cos(dc.a * kPi * x[0]) + dc.b >= 0.0;
        case DcFamily::dc2:
            return true; // constraints bind the distance function only
        case DcFamily::dc3:
            for (std::size_t j = 0; j + 1 < dc.m; ++j)
                if (std::cos(dc.a * kPi * x[j]) - dc.b < 0.0)
                    return false;
            return true;
        }
        return true;
    };

    std::vector<std::vector<double>> front;
    for (unsigned h = 12;; h = h + h / 2 + 1) {
        std::vector<std::vector<double>> samples;
        if (dc.base == DtlzBase::dtlz1) {
            samples = simplex_lattice_points(dc.m, h, 0.5);
        } else {
            samples = simplex_lattice_points(dc.m, h, 1.0);
            for (auto& f : samples) {
                double norm = 0.0;
                for (double v : f)
                    norm += v * v;
                norm = std::sqrt(norm);
                if (norm == 0.0)
                    continue;
                for (double& v : f)
                    v /= norm;
            }
        }
        front.clear();
        for (auto& f : samples) {
            std::vector<double> x = dc.base == DtlzBase::dtlz1 ? dtlz1_positions(f)
                                                               : dtlz3_positions(f);
            if (position_feasible(x))
                front.push_back(std::move(f));
        }
        if (front.size() >= resolution || front.size() > 200000 || h > 2000)
            break;
    }
    if (front.empty())
        throw ConfigError("dc-dtlz front sampling produced no feasible points");
    return downsample(std::move(front), resolution);
}

} // namespace

ReferenceFront reference_front(const ProblemSpec& problem, std::size_t resolution) {
    if (resolution < 100)
        throw ContractViolation("reference_front: resolution must be at least 100");

    ReferenceFront front;
    front.resolution = resolution;
    const std::string& name = problem.name;
    if (name.starts_with("ctp") && name.size() == 4) {
        front.points = ctp_front(name[3] - '0', resolution);
    } else {
        DcFamily family;
        if (name.starts_with("dc1"))
            family = DcFamily::dc1;
        else if (name.starts_with("dc2"))
            family = DcFamily::dc2;
        else if (name.starts_with("dc3"))
            family = DcFamily::dc3;
        else
            throw ConfigError("reference_front: no generator for problem '" + name + "'");
        DtlzBase base = name.ends_with("dtlz1") ? DtlzBase::dtlz1 : DtlzBase::dtlz3;
        front.points = dc_dtlz_front(dc_dtlz_defaults(family, base, problem.m), resolution);
    }
    if (front.points.empty())
        throw ConfigError("reference_front: empty feasible front for '" + name + "' at " +
                          std::to_string(resolution) + " points");
    return front;
}

void save_front(const ReferenceFront& front, const std::string& path) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& p : front.points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j)
                out << ' ';
            out << p[j];
        }
        out << '\n';
    }
    std::ofstream file(path, std::ios::trunc);
    if (!file)
        throw IoError("cannot write front file '" + path + "'");
    file << out.str();
}

ReferenceFront load_front(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw IoError("cannot read front file '" + path + "'");
    ReferenceFront front;
    std::string line;
    while (std::getline(file, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::vector<double> p;
        double v;
        while (row >> v)
            p.push_back(v);
        front.points.push_back(std::move(p));
    }
    front.resolution = front.points.size();
    return front;
}

} // namespace ctaea
