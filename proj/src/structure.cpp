#include "hurwitz/structure.hpp"

#include <numeric>

namespace hurwitz {

std::vector<Int> divisors_desc(Int n) {
    std::vector<Int> out;
    for (Int k = n; k >= 2; --k) {
        if (n % k == 0) out.push_back(k);
    }
    return out;
}

Int tau_numerator(Int s, Int t) { return 2 * t + s - s * t; }

std::vector<StructureMatch> detect_structures(const CandidateDatum& datum) {
    std::vector<StructureMatch> out;
    const std::size_t n = datum.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Int g = std::gcd(datum[i].gcd(), datum[j].gcd());
            for (Int s : divisors_desc(g)) {
                if (datum.degree() % s != 0) continue;
                StructureMatch m{i, j, s, datum.degree() / s, {}};
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != i && k != j) m.others.emplace_back(k, datum[k].gcd());
                }
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

namespace {

std::string context(Int s, Int t, Int d_prime) {
    return "(s=" + std::to_string(s) + ", t=" + std::to_string(t) + ", d'=" + std::to_string(d_prime) + ")";
}

FilterReport make_report(std::string rule, std::string detail, std::size_t index, Int value, Int bound, Int s,
                         Int t, Int d_prime) {
    return FilterReport{std::move(rule), std::move(detail) + " " + context(s, t, d_prime), index, value, bound, s, t,
                        d_prime};
}

void check_parts(std::vector<FilterReport>& out, const CandidateDatum& datum, std::size_t index, Int bound,
                 const char* rule, Int s, Int t, Int d_prime) {
    Int largest = datum[index].largest();
    if (largest > bound) {
        out.push_back(make_report(rule,
                                  "part " + std::to_string(largest) + " of " + datum[index].render() + " > " +
                                      std::to_string(bound),
                                  index, largest, bound, s, t, d_prime));
    }
}

void check_length(std::vector<FilterReport>& out, const CandidateDatum& datum, std::size_t index, Int bound,
                  bool strict, const char* rule, Int s, Int t, Int d_prime) {
    Int len = static_cast<Int>(datum[index].length());
    bool bad = strict ? len <= bound : len < bound;
    if (bad) {
        out.push_back(make_report(rule,
                                  "length " + std::to_string(len) + " of " + datum[index].render() +
                                      (strict ? " <= " : " < ") + std::to_string(bound),
                                  index, len, bound, s, t, d_prime));
    }
}

} // namespace

std::vector<FilterReport> prop1_filter(const CandidateDatum& datum) {
    std::vector<FilterReport> out;
    for (const auto& m : detect_structures(datum)) {
        const Int s = m.s, dp = m.d_prime;
        for (const auto& [k, g] : m.others) {
            std::string where = datum[k].render() + " has gcd t=" + std::to_string(g);
            if (s >= 4 && g >= 2) {
                // tau(s,t) <= 0 here, which the RH bound forbids; unreachable on valid candidates
                out.push_back(make_report("prop1.case1",
                                          where + " >= 2 with s >= 4 (t*tau = " +
                                              std::to_string(tau_numerator(s, g)) + " <= 0)",
                                          k, g, 1, s, g, dp));
            } else if (s == 3 && g != 1 && g != 2) {
                out.push_back(make_report("prop1.case2", where + " not in {1,2} with s = 3", k, g, 2, s, g, dp));
            } else if (s == 3 && g == 2 && dp % 4 != 0) {
                out.push_back(make_report("prop1.case2", where + " = 2 but 4 does not divide d'", k, dp, 4, s, g, dp));
            } else if (s == 2 && g >= 2 && dp % g != 0) {
                out.push_back(make_report("prop1.case3", where + " does not divide d'", k, g, dp, s, g, dp));
            }
        }
    }
    return out;
}

std::vector<FilterReport> corollary_filter(const CandidateDatum& datum, bool strict) {
    std::vector<FilterReport> out;
    for (const auto& m : detect_structures(datum)) {
        const Int s = m.s, dp = m.d_prime;
        for (const auto& [k, g] : m.others) {
            check_parts(out, datum, k, dp, "cor1.parts", s, 1, dp);
            check_length(out, datum, k, s, strict, "cor1.length", s, 1, dp);
        }
        if (s == 2) {
            for (const auto& [third, g] : m.others) {
                for (Int t : divisors_desc(g)) {
                    if (dp % t != 0) continue;
                    check_parts(out, datum, m.first, 2 * dp / t, "cor2.parts", s, t, dp);
                    check_parts(out, datum, m.second, 2 * dp / t, "cor2.parts", s, t, dp);
                    check_parts(out, datum, third, dp, "cor2.parts", s, t, dp);
                    for (const auto& [k, gk] : m.others) {
                        if (k == third) continue;
                        check_parts(out, datum, k, dp / t, "cor2.parts", s, t, dp);
                        check_length(out, datum, k, 2 * t, strict, "cor2.length", s, t, dp);
                    }
                }
            }
        }
        if (s == 3 && dp % 4 == 0) {
            for (const auto& [third, g] : m.others) {
                if (g % 2 != 0) continue;
                check_parts(out, datum, m.first, 3 * dp / 4, "cor3.parts", s, 2, dp);
                check_parts(out, datum, m.second, 3 * dp / 4, "cor3.parts", s, 2, dp);
                check_parts(out, datum, third, dp / 2, "cor3.parts", s, 2, dp);
                for (const auto& [k, gk] : m.others) {
                    if (k == third) continue;
                    check_parts(out, datum, k, dp / 4, "cor3.parts", s, 2, dp);
                    check_length(out, datum, k, 12, strict, "cor3.length", s, 2, dp);
                }
            }
        }
    }
    return out;
}

std::vector<FilterReport> run_filters(const CandidateDatum& datum, bool strict_corollaries) {
    auto out = prop1_filter(datum);
    auto cor = corollary_filter(datum, strict_corollaries);
    out.insert(out.end(), cor.begin(), cor.end());
    return out;
}

} // namespace hurwitz
