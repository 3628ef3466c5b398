#include "qsw/registry.hpp"

#include <chrono>

namespace qsw {

namespace {

Identity make(std::string id, bool conjecture, Ring ring, std::string lhs,
              std::string rhs, long order = 150) {
    Identity e;
    e.id = std::move(id);
    e.conjecture = conjecture;
    e.ring = ring;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.default_order = order;
    return e;
}

constexpr bool kTheorem = false;
constexpr bool kConjecture = true;

std::vector<Identity> build_registry() {
    std::vector<Identity> r;
    const Ring Z = Ring::Integer;
    const Ring E = Ring::Eisenstein;

    // ---- Rogers-Ramanujan pair: sum = product, mod-2 equations, companions
    r.push_back(make("rr_sum_product_G", kTheorem, Z, "sum(G)", "G"));
    r.push_back(make("rr_sum_product_H", kTheorem, Z, "sum(H)", "H"));
    r.push_back(make("rr_modeq_G", kTheorem, Z, "G",
                     "poch(q^8;q^8)/poch(q^2;q^2)*(q*H(-q^4)+G(q^16))"));
    r.push_back(make("rr_modeq_H", kTheorem, Z, "H",
                     "poch(q^8;q^8)/poch(q^2;q^2)*(G(-q^4)+q^3*H(q^16))"));
    r.push_back(make(
        "rr_companion_G", kTheorem, Z, "G",
        "(G(q^16)-q*H(-q^4))/(poch(q^4;q^8)*poch(q,q^9;q^10)^2"
        "*poch(q^6,q^10,q^14;q^20))"));
    r.push_back(make(
        "rr_companion_H", kTheorem, Z, "H",
        "(G(-q^4)-q^3*H(q^16))/(poch(q^4;q^8)*poch(q^3,q^7;q^10)^2"
        "*poch(q^2,q^10,q^18;q^20))"));

    // ---- Rogers-Selberg triple (modulus 7)
    r.push_back(make("rs_sum_product_A", kTheorem, Z, "sum(A)", "A"));
    r.push_back(make("rs_sum_product_B", kTheorem, Z, "sum(B)", "B"));
    r.push_back(make("rs_sum_product_C", kTheorem, Z, "sum(C)", "C"));
    r.push_back(make("septic_modeq_A", kTheorem, Z, "A",
                     "(q*C(-q^2)+A(q^8))/poch(q^2;q^4)^2"));
    r.push_back(make("septic_modeq_B", kTheorem, Z, "B",
                     "(A(-q^2)+q*B(q^8))/poch(q^2;q^4)^2"));
    r.push_back(make("septic_modeq_C", kTheorem, Z, "C",
                     "(B(-q^2)+q^3*C(q^8))/poch(q^2;q^4)^2"));
    r.push_back(make(
        "septic_companion_A", kTheorem, Z, "A",
        "poch(-q,-q^5,-q^9,-q^13;q^14)*(A(q^8)-q*C(-q^2))"
        "/(poch(q^2;q^4)^2*poch(q,q^5,q^9,q^13;q^14))"));
    r.push_back(make(
        "septic_companion_B", kTheorem, Z, "B",
        "poch(-q,-q^3,-q^11,-q^13;q^14)*(A(-q^2)-q*B(q^8))"
        "/(poch(q^2;q^4)^2*poch(q,q^3,q^11,q^13;q^14))"));
    r.push_back(make(
        "septic_companion_C", kTheorem, Z, "C",
        "poch(-q^3,-q^5,-q^9,-q^11;q^14)*(B(-q^2)-q^3*C(q^8))"
        "/(poch(q^2;q^4)^2*poch(q^3,q^5,q^9,q^11;q^14))"));

    // ---- modulus 9 family: real members
    r.push_back(make("kr_sum_product_K1", kConjecture, Z, "sum(K1)", "K1"));
    r.push_back(make("kr_sum_product_K2", kConjecture, Z, "sum(K2)", "K2"));
    r.push_back(make("kr_sum_product_K3", kConjecture, Z, "sum(K3)", "K3"));
    r.push_back(make(
        "kr_modeq_K1", kTheorem, Z, "K1",
        "(q*K2(-q^2)+K1(q^8))/(poch(q^2;q^4)*poch(q^6;q^12)"
        "*poch(q^3,q^15;q^18)*poch(-q^5,-q^13;q^18))"));
    r.push_back(make(
        "kr_modeq_K2", kTheorem, Z, "K2",
        "(K3(-q^2)+q*K2(q^8))/(poch(q^2;q^4)*poch(q^6;q^12)"
        "*poch(q^3,q^15;q^18)*poch(-q,-q^17;q^18))"));
    r.push_back(make(
        "kr_modeq_K3", kTheorem, Z, "K3",
        "(K1(-q^2)+q^5*K3(q^8))/(poch(q^2;q^4)*poch(q^6;q^12)"
        "*poch(q^3,q^15;q^18)*poch(-q^7,-q^11;q^18))"));
    r.push_back(make(
        "kr_companion_K1", kTheorem, Z, "K1",
        "poch(-q,-q^17;q^18)*(K1(q^8)-q*K2(-q^2))"
        "/(poch(q^2;q^4)*poch(q^6;q^12)*poch(q^3,q^15;q^18)"
        "*poch(q,q^5,q^13,q^17;q^18))"));
    r.push_back(make(
        "kr_companion_K2", kTheorem, Z, "K2",
        "poch(-q^7,-q^11;q^18)*(K3(-q^2)-q*K2(q^8))"
        "/(poch(q^2;q^4)*poch(q^6;q^12)*poch(q^3,q^15;q^18)"
        "*poch(q,q^7,q^11,q^17;q^18))"));
    r.push_back(make(
        "kr_companion_K3", kTheorem, Z, "K3",
        "poch(-q^5,-q^13;q^18)*(K1(-q^2)-q^5*K3(q^8))"
        "/(poch(q^2;q^4)*poch(q^6;q^12)*poch(q^3,q^15;q^18)"
        "*poch(q^5,q^7,q^11,q^13;q^18))"));

    // ---- modulus 9 family: remaining members and Eisenstein pairs
    r.push_back(make("kr_sum_product_K4", kConjecture, Z, "sum(K4)", "K4"));
    r.push_back(make("kr_sum_product_K5", kConjecture, Z, "sum(K5)", "K5"));
    r.push_back(make("kr_sum_product_K6", kConjecture, E, "sum(K6)", "K6"));
    r.push_back(make("kr_sum_product_K7", kConjecture, E, "sum(K7)", "K7"));
    r.push_back(make("kr_sum_product_K4b", kConjecture, Z, "sum(K4b)", "K4b"));
    r.push_back(make("kr_sum_product_K5b", kConjecture, Z, "sum(K5b)", "K5b"));
    r.push_back(make("kr_sum_product_K6b", kConjecture, E, "sum(K6b)", "K6b"));
    r.push_back(make("kr_sum_product_K7b", kConjecture, E, "sum(K7b)", "K7b"));
    r.push_back(make("k6k6bar", kTheorem, E, "K6*K6b",
                     "poch(q^6;q^9)/(poch(q;q^3)*poch(q^2;q^3)^2)"));
    r.push_back(make("k7k7bar", kTheorem, E, "K7*K7b",
                     "poch(q^3;q^9)/(poch(q;q^3)^2*poch(q^2;q^3))"));
    r.push_back(make("k6k7bar", kTheorem, E, "K6*K7b", "ETA(1)(wq)/ETA(1)"));

    // ---- modulus 11 Andrews-Gordon surrogates
    r.push_back(make(
        "mod11_surrogate_P1", kTheorem, Z, "AG(11,1)(q^2)",
        "(AG(11,5)(-q^2)-q^2*AG(11,3)(q^8))"
        "/(poch(q^2;q^4)^2*poch(q^18,q^26;q^44))"));
    r.push_back(make(
        "mod11_surrogate_P2", kTheorem, Z, "AG(11,2)(q^2)",
        "(AG(11,5)(q^8)-q^2*AG(11,1)(-q^2))"
        "/(poch(q^2;q^4)^2*poch(q^14,q^30;q^44))"));
    r.push_back(make(
        "mod11_surrogate_P3", kTheorem, Z, "AG(11,3)(q^2)",
        "(AG(11,4)(-q^2)-q^4*AG(11,2)(q^8))"
        "/(poch(q^2;q^4)^2*poch(q^10,q^34;q^44))"));
    r.push_back(make(
        "mod11_surrogate_P4", kTheorem, Z, "AG(11,4)(q^2)",
        "(AG(11,2)(-q^2)-q^6*AG(11,1)(q^8))"
        "/(poch(q^2;q^4)^2*poch(q^6,q^38;q^44))"));
    r.push_back(make(
        "mod11_surrogate_P5", kTheorem, Z, "q^2*AG(11,5)(q^2)",
        "(AG(11,4)(q^8)-AG(11,3)(-q^2))"
        "/(poch(q^2;q^4)^2*poch(q^2,q^42;q^44))"));

    // ---- cubic-modulus pair for K
    r.push_back(make(
        "kq_modeq_plus", kTheorem, Z, "K",
        "poch(q^6;q^6)*poch(q^8;q^8)^2/(poch(q^2;q^2)^2*poch(q^24;q^24))"
        "*(K(-q^4)+q*K(q^16))"));
    r.push_back(make(
        "kq_modeq_minus", kTheorem, Z, "K",
        "poch(q^2;q^2)*poch(q^3;q^3)^2*poch(q^8;q^8)^2*poch(q^12;q^12)"
        "/(poch(q;q)^2*poch(q^4;q^4)*poch(q^6;q^6)^2*poch(q^24;q^24))"
        "*(K(-q^4)-q*K(q^16))"));

    return r;
}

} // namespace

const std::vector<Identity>& registry() {
    static const std::vector<Identity> r = build_registry();
    return r;
}

const Identity& registry_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw UnknownIdError("no identity with id '" + id + "'");
}

CheckReport run_check(const std::string& id, long order) {
    const Identity& e = registry_entry(id);
    if (order < 0) order = e.default_order;
    CheckReport report;
    report.id = e.id;
    report.conjecture = e.conjecture;
    report.order = order;
    auto t0 = std::chrono::steady_clock::now();
    Series lhs = eval_expr(parse_expr(e.lhs), order);
    Series rhs = eval_expr(parse_expr(e.rhs), order);
    EqualityResult eq = series_equal(lhs, rhs, order);
    auto t1 = std::chrono::steady_clock::now();
    report.pass = eq.equal;
    if (!eq.equal) {
        Mismatch m;
        m.degree = eq.degree;
        m.lhs = eq.lhs;
        m.rhs = eq.rhs;
        report.first_mismatch = m;
    }
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                    .count();
    return report;
}

std::vector<CheckReport> run_all(long order) {
    std::vector<CheckReport> out;
    out.reserve(registry().size());
    for (const auto& e : registry()) out.push_back(run_check(e.id, order));
    return out;
}

bool theorems_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.conjecture && !r.pass) return false;
    return true;
}

} // namespace qsw
