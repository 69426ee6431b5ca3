#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "genus1/families.hpp"

namespace genus1 {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
    i64 bound{500};          // generic enumeration bound
    i64 markov_limit{100000};
    i64 f2_bound{10000};
    i64 a_bound{91};
    int jobs{1};
    std::string format{"text"};
    std::string out;
};

// Full reconstruction record for one family embedding. Every emitted
// certificate has all four checks true; emission fails otherwise.
struct EmbeddingCertificate {
    FamilyTag tag{FamilyTag::F1};
    std::array<i64, 3> params{};
    int sign{1};
    std::array<BigLattice2Vector, 3> curves;
    SignTriple delta;
    std::array<Big, 3> framings;
    BigSL2Matrix monodromy_matrix;
    int rec_sign{1};
    Big rec_k{0};
    Big a{0};
    std::array<Big, 3> x;
    std::array<RationalBall, 3> balls;
    std::array<ResidueClass, 3> q_residues;
    bool check_eq1{false};
    bool check_eq2{false};
    bool check_closes{false};
    bool check_qsystem{false};
    std::string version{kToolVersion};
    i64 bound_used{0};
};

namespace detail {

inline std::array<int, 3> family_orientations(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::F1: return {1, 1, 1};
        case FamilyTag::F2: return {1, -1, -1};
        case FamilyTag::F3: return {1, -1, 1};
    }
    return {1, 1, 1};
}

struct FamilyData {
    SignTriple delta;
    std::array<Big, 3> p_base;   // curve p-coordinates for the s = +1 branch
    std::array<Big, 3> expect_x; // pairings forced by the exact q-system
    int expect_sign;             // monodromy = expect_sign * tau_lambda^expect_k
    i64 expect_k;
    QSolution qs;
    std::array<ResidueClass, 3> ball_residues;
};

inline FamilyData family_data(FamilyTag tag, const std::array<i64, 3>& params, int sign) {
    FamilyData d;
    switch (tag) {
        case FamilyTag::F1: {
            i64 y1 = params[0], y2 = params[1], y3 = params[2];
            if (!is_markov(y1, y2, y3))
                throw std::invalid_argument("certificate: parameters are not a Markov triple");
            i64 yh2 = 3 * y1 * y3 - y2;
            d.delta = SignTriple{{1, 1, 1}};
            d.p_base = {to_big(y1), to_big(yh2), to_big(y3)};
            d.expect_x = {Big(3 * to_big(y1)), Big(3 * to_big(y2)), Big(3 * to_big(y3))};
            d.expect_sign = 1;
            d.expect_k = -9;
            d.qs = solve_q_f1(y1, yh2, y3, sign);
            d.ball_residues = f1_ball_residues({y1, y2, y3, yh2}, sign, d.qs);
            return d;
        }
        case FamilyTag::F2: {
            i64 x1 = params[0], x2 = params[1], x3i = -params[2];
            i64 xh2 = -x1 * x3i - x2;
            d.delta = SignTriple{{1, -1, -1}};
            d.p_base = {to_big(x1), to_big(-xh2), to_big(-x3i)};
            d.expect_x = {to_big(x1), to_big(x2), to_big(x3i)};
            d.expect_sign = 1;
            d.expect_k = -1;
            d.qs = solve_q_f2(params[0], params[1], params[2], sign);
            d.ball_residues = f2_ball_residues(params, sign, d.qs);
            return d;
        }
        case FamilyTag::F3: {
            i64 a = params[0], b = params[1];
            int eps = static_cast<int>(params[2]);
            d.delta = SignTriple{{1, -1, 1}};
            d.p_base = {fib(a), fib(b - eps * a), Big(-eps * fib(b))};
            d.expect_x = {lucas(a), Big(-eps * lucas(a + eps * b)), lucas(b)};
            d.expect_sign = -1;
            d.expect_k = -5;
            d.qs = solve_q_f3(a, b, eps, sign);
            d.ball_residues = f3_ball_residues(a, b, eps, sign, d.qs);
            return d;
        }
    }
    throw std::invalid_argument("certificate: unknown family");
}

}  // namespace detail

// Builds and fully checks a certificate. The curves realize the exact
// q-system witness; ball coefficients use the per-ball residue presentation.
inline EmbeddingCertificate make_certificate(FamilyTag tag, const std::array<i64, 3>& params,
                                             int sign, i64 bound_used = 0) {
    detail::FamilyData d = detail::family_data(tag, params, sign);
    EmbeddingCertificate c;
    c.tag = tag;
    c.params = params;
    c.sign = sign;
    c.delta = d.delta;
    c.bound_used = bound_used;
    c.q_residues = d.ball_residues;
    Big s = to_big(-sign);
    BigTwistFactorization f;
    for (int i = 0; i < 3; ++i) {
        c.curves[i] = {Big(s * d.p_base[i]), d.qs.witness[i]};
        c.framings[i] = sub_ck(mul_ck(c.curves[i].p, c.curves[i].q), to_big(d.delta.d[i]));
        f.factors.push_back({c.curves[i], d.delta.d[i]});
    }
    BigCurveTriple trip{{c.curves[0], c.curves[1], c.curves[2]}, d.delta};
    auto xs = x_of_curves(trip);
    c.x = {xs[0], xs[1], xs[2]};
    c.check_qsystem = (c.x[0] == d.expect_x[0] && c.x[1] == d.expect_x[1] &&
                       c.x[2] == d.expect_x[2]);
    SignTriple delta = d.delta;
    Big lhs(0);
    for (int i = 0; i < 3; ++i) lhs += to_big(delta.d[i]) * c.x[i] * c.x[i];
    lhs -= c.x[0] * c.x[1] * c.x[2];
    c.a = Big(to_big(delta.product()) * lhs);
    c.check_eq1 = (c.a == 0 || c.a == 4);
    std::array<Big, 3> pv{c.curves[0].p, c.curves[1].p, c.curves[2].p};
    c.check_eq2 = verify_eq2(delta, pv, std::array<Big, 3>{c.x[0], c.x[1], c.x[2]});
    c.monodromy_matrix = monodromy(f);
    auto rec = recognize_lambda_power(c.monodromy_matrix);
    c.check_closes = closes_to_s3(c.monodromy_matrix) && rec.has_value() &&
                     rec->first == d.expect_sign && rec->second == to_big(d.expect_k);
    if (rec) {
        c.rec_sign = rec->first;
        c.rec_k = rec->second;
    }
    auto ori = detail::family_orientations(tag);
    for (int i = 0; i < 3; ++i) c.balls[i] = detail::ball_from_residue(d.ball_residues[i], ori[i]);
    return c;
}

inline bool certificate_checks_pass(const EmbeddingCertificate& c) {
    return c.check_eq1 && c.check_eq2 && c.check_closes && c.check_qsystem;
}

namespace detail {

inline std::string join_big(const std::array<Big, 3>& v) {
    std::ostringstream os;
    os << v[0] << "," << v[1] << "," << v[2];
    return os.str();
}

}  // namespace detail

// Canonical machine-readable document: fixed key order, UTF-8, decimal
// integers.
inline std::string serialize_certificate(const EmbeddingCertificate& c) {
    std::ostringstream os;
    os << "genus1-certificate: 1\n";
    os << "version: " << c.version << "\n";
    os << "family: " << family_name(c.tag) << "\n";
    if (c.tag == FamilyTag::F1)
        os << "param-y: " << c.params[0] << "," << c.params[1] << "," << c.params[2] << "\n";
    else if (c.tag == FamilyTag::F2)
        os << "param-x: " << c.params[0] << "," << c.params[1] << "," << c.params[2] << "\n";
    else {
        os << "param-a: " << c.params[0] << "\n";
        os << "param-b: " << c.params[1] << "\n";
        os << "param-eps: " << c.params[2] << "\n";
    }
    os << "sign: " << c.sign << "\n";
    os << "curves: ";
    for (int i = 0; i < 3; ++i)
        os << c.curves[i].p << "," << c.curves[i].q << (i < 2 ? ";" : "\n");
    os << "delta: " << c.delta.d[0] << "," << c.delta.d[1] << "," << c.delta.d[2] << "\n";
    os << "framings: " << detail::join_big(c.framings) << "\n";
    os << "monodromy: " << c.monodromy_matrix.m00 << "," << c.monodromy_matrix.m01 << ","
       << c.monodromy_matrix.m10 << "," << c.monodromy_matrix.m11 << "\n";
    os << "recognized: " << (c.rec_sign > 0 ? "+1" : "-1") << "," << c.rec_k << "\n";
    os << "a: " << c.a << "\n";
    os << "x: " << detail::join_big(c.x) << "\n";
    os << "balls: ";
    for (int i = 0; i < 3; ++i) {
        const auto& b = c.balls[i];
        os << (b.orientation > 0 ? "+" : "-") << "," << b.p << "," << b.qbar
           << (i < 2 ? ";" : "\n");
    }
    os << "check-eq1: " << (c.check_eq1 ? "true" : "false") << "\n";
    os << "check-eq2: " << (c.check_eq2 ? "true" : "false") << "\n";
    os << "check-closes: " << (c.check_closes ? "true" : "false") << "\n";
    os << "check-qsystem: " << (c.check_qsystem ? "true" : "false") << "\n";
    os << "h: 1,3,1\n";
    os << "bound: " << c.bound_used << "\n";
    return os.str();
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    std::size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace detail

// Reads back a serialized certificate: the family, parameters and sign are
// enough to rebuild and re-check everything; the remaining keys must match
// the rebuilt record byte for byte.
inline EmbeddingCertificate parse_certificate(const std::string& text) {
    FamilyTag tag = FamilyTag::F1;
    std::array<i64, 3> params{};
    int sign = 1;
    i64 bound = 0;
    bool have_family = false;
    for (const auto& line : detail::split(text, '\n')) {
        auto pos = line.find(':');
        if (pos == std::string::npos) continue;
        std::string key = detail::strip(line.substr(0, pos));
        std::string val = detail::strip(line.substr(pos + 1));
        if (key == "family") {
            if (val == "f1") tag = FamilyTag::F1;
            else if (val == "f2") tag = FamilyTag::F2;
            else if (val == "f3") tag = FamilyTag::F3;
            else throw std::invalid_argument("parse_certificate: unknown family " + val);
            have_family = true;
        } else if (key == "param-y" || key == "param-x") {
            auto parts = detail::split(val, ',');
            if (parts.size() != 3) throw std::invalid_argument("parse_certificate: bad params");
            for (int i = 0; i < 3; ++i) params[i] = std::stoll(parts[i]);
        } else if (key == "param-a") {
            params[0] = std::stoll(val);
        } else if (key == "param-b") {
            params[1] = std::stoll(val);
        } else if (key == "param-eps") {
            params[2] = std::stoll(val);
        } else if (key == "sign") {
            sign = std::stoi(val);
        } else if (key == "bound") {
            bound = std::stoll(val);
        }
    }
    if (!have_family) throw std::invalid_argument("parse_certificate: missing family");
    return make_certificate(tag, params, sign, bound);
}

}  // namespace genus1
