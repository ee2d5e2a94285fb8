#include "wshuffle/rmatrix.hpp"

#include <sstream>

namespace wsh {

RatFun arg_var(int v) { return RatFun(Poly::var(v)); }
RatFun arg_ratio(int va, int vb) {
    return RatFun(Poly(Mono::var(va) / Mono::var(vb), 1));
}
RatFun arg_scaled(const Scalar& c, int v) { return RatFun(c) * arg_var(v); }
RatFun arg_const(const Scalar& c) { return RatFun(c); }

int residue_1n(int i, int n) {
    int r = i % n;
    return r <= 0 ? r + n : r;
}

int winding(int i, int n) {
    int w = (i - 1) / n;
    if ((i - 1) % n < 0) --w;
    return w;
}

TensorRat make_R(int n, const RatFun& x) {
    RatFun q = RatFun(Scalar::q());
    RatFun qi = RatFun(Scalar::q(-1));
    RatFun pole = (RatFun(1) - x).inv();
    TensorRat r(n, 2);
    RatFun diag = (q - x * qi) * pole;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            uint32_t rc = (uint32_t)((i - 1) * n + (j - 1));
            r.add(rc, rc, i == j ? diag : RatFun(1));
        }
    RatFun off = (q - qi) * pole;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            RatFun v = i < j ? off * x : off;
            // E_ij tensor E_ji : row (i,j), column (j,i)
            r.add((uint32_t)((i - 1) * n + (j - 1)),
                  (uint32_t)((j - 1) * n + (i - 1)), v);
        }
    return r;
}

TensorRat make_R21(int n, const RatFun& x) {
    return make_R(n, x).permute_conj({2, 1});
}

TensorRat make_Rtilde_plus(int n, const RatFun& x) {
    return make_R21(n, x.inv() * RatFun(Scalar::t(-2 * n)));
}

TensorRat make_D(int n) {
    TensorRat d(n, 1);
    for (int i = 1; i <= n; ++i)
        d.set((uint32_t)(i - 1), (uint32_t)(i - 1), RatFun(Scalar::q(2 * i)));
    return d;
}

TensorRat make_Rtilde_minus(int n, const RatFun& x) {
    TensorRat d2 = make_D(n).embed({2}, 2);
    TensorRat d2i = d2.map_entries([](const RatFun& v) { return v.inv(); });
    return d2 * make_R21(n, x.inv() * RatFun(Scalar::p_pow(n, 2))) * d2i;
}

RatFun make_f(int n, const RatFun& x) {
    (void)n;
    RatFun q2 = RatFun(Scalar::q(2)), qm2 = RatFun(Scalar::q(-2));
    return (RatFun(1) - x * q2) * (RatFun(1) - x * qm2) *
           ((RatFun(1) - x).inv().pow(2));
}

TensorRat make_perm(int n) {
    TensorRat p(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            p.set((uint32_t)((i - 1) * n + (j - 1)), (uint32_t)((j - 1) * n + (i - 1)),
                  RatFun(1));
    return p;
}

TensorRat make_colon(int n) {
    return make_perm(n).scale(RatFun(Scalar::q(-1) - Scalar::q(1)));
}

TensorRat make_A(int n) {
    TensorRat a(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a.set((uint32_t)((i - 1) * n + (i - 1)), (uint32_t)((j - 1) * n + (j - 1)),
                  RatFun(1));
    return a;
}

namespace {

TensorRat make_Qbar(int n, const RatFun& w, bool minus) {
    // -q sum_{i,j} (w)^{delta_{i<=j}} / (1 - w) E_ij tensor E_ji [q^{2(j-i)}]
    RatFun pole = (RatFun(1) - w).inv();
    TensorRat r(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            RatFun v = (i <= j ? w : RatFun(1)) * pole * RatFun(Scalar(-1) * Scalar::q());
            if (minus) v = v * RatFun(Scalar::q(2 * (j - i)));
            r.add((uint32_t)((i - 1) * n + (j - 1)), (uint32_t)((j - 1) * n + (i - 1)), v);
        }
    return r;
}

}  // namespace

TensorRat make_Qbar_plus(int n, const RatFun& x) {
    return make_Qbar(n, x * RatFun(Scalar::t(2 * n)), false);
}

TensorRat make_Qbar_minus(int n, const RatFun& x) {
    return make_Qbar(n, x * RatFun(Scalar::p_pow(n, -2)), true);
}

TensorRat make_E_ext(int n, int i, int j, int var, const RatFun& coeff) {
    int w = winding(i, n) - winding(j, n);
    RatFun c = coeff;
    if (w != 0) c = c * RatFun(Poly::var(var, w));
    return TensorRat::unit(n, residue_1n(i, n), residue_1n(j, n), c);
}

namespace {

std::string first_witness(const TensorRat& lhs, const TensorRat& rhs,
                          const char* label) {
    TensorRat d = lhs - rhs;
    if (d.is_zero()) return {};
    const auto& [rc, v] = *d.entries().begin();
    std::ostringstream os;
    auto rd = d.digits(rc.first), cd = d.digits(rc.second);
    os << label << " mismatch at entry (";
    for (int a : rd) os << a;
    os << "|";
    for (int a : cd) os << a;
    os << "): difference " << v.str();
    return os.str();
}

}  // namespace

std::string check_ybe(int n) {
    int z1 = z_var(1), z2 = z_var(2), z3 = z_var(3);
    TensorRat r12 = make_R(n, arg_ratio(z1, z2)).embed({1, 2}, 3);
    TensorRat r13 = make_R(n, arg_ratio(z1, z3)).embed({1, 3}, 3);
    TensorRat r23 = make_R(n, arg_ratio(z2, z3)).embed({2, 3}, 3);
    return first_witness(r12 * r13 * r23, r23 * r13 * r12, "YBE");
}

std::string check_unitarity(int n) {
    int z = z_var(1);
    TensorRat lhs = make_R(n, arg_var(z)) * make_R21(n, arg_var(z).inv());
    TensorRat rhs = TensorRat::identity(n, 2).scale(make_f(n, arg_var(z)));
    return first_witness(lhs, rhs, "unitarity");
}

std::string check_R_residue(int n) {
    int x = kX;
    TensorRat r = make_R(n, arg_var(x));
    TensorRat res = r.map_entries(
        [&](const RatFun& v) { return residue_simple(v, x, Scalar(1), -1); });
    return first_witness(res, make_colon(n), "R residue");
}

std::string check_property(int n) {
    int z = kX;
    TensorRat d1 = make_D(n).embed({1}, 2);
    TensorRat d1i = d1.map_entries([](const RatFun& v) { return v.inv(); });
    TensorRat lhs = (d1i * make_Rtilde_plus(n, arg_var(z)) * d1).partial_transpose({1}) *
                    make_R(n, arg_var(z) * RatFun(Scalar::p_pow(n, 2))).partial_transpose({1});
    return first_witness(lhs, TensorRat::identity(n, 2), "property");
}

// Factor layout for elem2/elem3: slots (1, 2, circ, bullet) = (1, 2, 3, 4).
std::string check_elem2(int n) {
    int z = kX;
    TensorRat a1c = make_A(n).embed({1, 3}, 4);
    TensorRat a2b = make_A(n).embed({2, 4}, 4);
    TensorRat rcb = make_R(n, arg_var(z) * RatFun(Scalar::p_pow(n, 2)))
                        .partial_transpose({1, 2})
                        .embed({3, 4}, 4);
    TensorRat d1 = make_D(n).embed({1}, 4);
    TensorRat d1i = d1.map_entries([](const RatFun& v) { return v.inv(); });
    TensorRat rt = make_Rtilde_plus(n, arg_var(z)).embed({1, 2}, 4);
    TensorRat lhs = a1c * rcb * (d1i * rt * d1) * a2b;
    return first_witness(lhs, a1c * a2b, "elem2");
}

std::string check_elem3(int n) {
    int z = kX;
    TensorRat a1c = make_A(n).embed({1, 3}, 4);
    TensorRat a2b = make_A(n).embed({2, 4}, 4);
    // R_{bullet circ}(1/z)^{dagger_circ dagger_bullet} lives in slots (4,3).
    TensorRat rbc = make_R(n, arg_var(z).inv())
                        .partial_transpose({1, 2})
                        .embed({4, 3}, 4);
    TensorRat r12 = make_R(n, arg_var(z)).embed({1, 2}, 4);
    TensorRat lhs = rbc * r12 * a1c * a2b;
    TensorRat rhs = (a1c * a2b).scale(make_f(n, arg_var(z)));
    return first_witness(lhs, rhs, "elem3");
}

std::string check_elem1(int n, uint64_t seed) {
    // Tr_{12}( A_{23} R_12(z p^2) B_13 [D_1^{-1} Rtilde^+_12(z) D_1] )
    //   = Tr_{12}( A_23 B_13 )
    // with A, B random Laurent-monomial matrices on the named slots.
    int z = kX;
    uint64_t s = seed;
    auto rnd = [&s]() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t x = s;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    auto random_mat = [&](int) {
        TensorRat m(n, 2);
        for (int trial = 0; trial < 2 * n; ++trial) {
            int i = (int)(rnd() % n) + 1, j = (int)(rnd() % n) + 1;
            int k = (int)(rnd() % n) + 1, l = (int)(rnd() % n) + 1;
            int e = (int)(rnd() % 3) - 1;
            int c = (int)(rnd() % 5) - 2;
            if (c == 0) c = 1;
            RatFun v = RatFun(Scalar(c)) * RatFun(Poly::var(z, e));
            m.add((uint32_t)((i - 1) * n + (k - 1)), (uint32_t)((j - 1) * n + (l - 1)), v);
        }
        return m;
    };
    TensorRat A = random_mat(0).embed({2, 3}, 3);
    TensorRat B = random_mat(1).embed({1, 3}, 3);
    TensorRat r12 = make_R(n, arg_var(z) * RatFun(Scalar::p_pow(n, 2))).embed({1, 2}, 3);
    TensorRat d1 = make_D(n).embed({1}, 3);
    TensorRat d1i = d1.map_entries([](const RatFun& v) { return v.inv(); });
    TensorRat rt = make_Rtilde_plus(n, arg_var(z)).embed({1, 2}, 3);
    TensorRat lhs = (A * r12 * B * (d1i * rt * d1)).trace_over({1, 2});
    TensorRat rhs = (A * B).trace_over({1, 2});
    return first_witness(lhs, rhs, "elem1");
}

}  // namespace wsh
