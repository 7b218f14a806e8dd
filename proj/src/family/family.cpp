#include "family/family.hpp"

#include <algorithm>
#include <cmath>

#include "field/cubic_order.hpp"
#include "nt/primes.hpp"
#include "symbol/symbol.hpp"

namespace quadfam {

namespace {

// Units of (O_K / 4)^*: closure of the unit generators mod 4.
struct Mod4Units {
    std::vector<std::array<i64, 3>> elems;

    static std::array<i64, 3> red(const FieldElement& g) {
        return {emod(g.c[0], 4), emod(g.c[1], 4), emod(g.c[2], 4)};
    }

    explicit Mod4Units(const NumberField& K) {
        std::vector<FieldElement> gens{K.torsion};
        for (const auto& u : K.fund_units) {
            gens.push_back(u);
            gens.push_back(unit_inverse(K, u));
        }
        std::vector<std::array<i64, 3>> cur{{1, 0, 0}};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : std::vector<std::array<i64, 3>>(cur)) {
                for (const auto& g : gens) {
                    FieldElement prod = fmul(K, fe(e[0], e[1], e[2]), g);
                    auto r = red(prod);
                    if (std::find(cur.begin(), cur.end(), r) == cur.end()) {
                        cur.push_back(r);
                        grew = true;
                    }
                }
            }
        }
        elems = std::move(cur);
        std::sort(elems.begin(), elems.end());
    }

    bool contains(const FieldElement& g) const {
        return std::binary_search(elems.begin(), elems.end(), red(g));
    }
};

// Conductor product support: primes above 2 where the Smith criterion fails
// for some unit generator. Coprimality with odd primes always holds, so only
// the "coprime to 2" clause ever bites; see the module notes.
bool coprime_to_conductor(const NumberField& K, const PrimeIdeal& P) { return P.p != 2; }

bool is_in_PK_impl(const NumberField& K, const PrimeIdeal& P, const Mod4Units& U) {
    if (!coprime_to_conductor(K, P)) return false;
    // (b) trivial class in the mod-4 ray group: some unit times a generator is 1 mod 4
    auto g = principal_generator_opt(K, ideal_from_prime(K, P));
    if (!g) return false;  // h = 1 fields never hit this
    if (!U.contains(*g)) return false;
    // (c) all unit generators are squares mod P
    return unit_square_check(K, P);
}

}  // namespace

bool is_in_PK(const NumberField& K, const PrimeIdeal& P) {
    if (K.n > 2) throw FamilyError("is_in_PK: cubic fields are validation-only");
    Mod4Units U(K);
    return is_in_PK_impl(K, P, U);
}

bool smith_check(const NumberField& K, const FieldElement& alpha) {
    if (K.n > 2) throw FamilyError("smith_check: cubic fields are validation-only");
    for (const auto& P : K.two_adic) {
        Ideal Pi = ideal_from_prime(K, P);
        Ideal P2 = ideal_mul(K, Pi, Pi);
        i64 e = 1;
        for (int i = 0; i < P.f; ++i) e *= 2;  // 2^f
        FieldElement pw = alpha;
        for (i64 i = 1; i < e; ++i) pw = fmul(K, pw, alpha);
        FieldElement diff = fsub(K, pw, alpha);
        if (ideal_contains(P2, diff)) return false;
    }
    return true;
}

FieldElement normalize_generator(const NumberField& K, const Ideal& a) {
    FieldElement g = principal_generator(K, a);
    if (smith_check(K, g)) return g;
    if (!K.epsilon) die("normalize_generator: field has no epsilon unit");
    FieldElement g2 = fmul(K, g, *K.epsilon);
    if (!smith_check(K, g2))
        die("normalize_generator: neither candidate satisfies the Smith condition");
    return g2;
}

BaseFieldReport check_base_field(const NumberField& K) {
    BaseFieldReport R;
    R.is_galois = true;  // make_field rejects non-Galois input
    R.two_splitting = K.two_ef;
    R.epsilon = K.epsilon;
    if (!K.epsilon) R.reasons.push_back("no unit of order 2 mod p^2 at the primes above 2");

    if (K.n == 1) {
        R.class_number_one = true;
    } else if (K.n == 2) {
        long double M;
        if (K.kind == FieldKind::ImagQuadratic)
            M = (2.0L / 3.14159265358979323846L) * sqrtl((long double)(-K.field_disc));
        else
            M = sqrtl((long double)K.field_disc) / 2.0L;
        i64 bound = (i64)M + 1;  // rounding up is sound: extra primes are principal iff h=1 anyway
        R.class_number_one = true;
        for (i64 p = 2; p <= bound; ++p) {
            if (!miller_rabin(p)) continue;
            for (const auto& P : factor_rational_prime(p, K)) {
                if (P.norm() > bound) continue;
                if (!principal_generator_opt(K, ideal_from_prime(K, P))) {
                    R.class_number_one = false;
                    R.reasons.push_back("non-principal prime of norm " + std::to_string(P.norm()) +
                                        " above " + std::to_string(p));
                }
            }
            if (!R.class_number_one) break;
        }
    } else {
        if (!K.cubic->class_number_decided) {
            R.class_number_one = false;
            R.reasons.push_back("class number certification incomplete");
        } else {
            R.class_number_one = K.cubic->class_number_one;
            for (const auto& n : K.cubic->notes) R.reasons.push_back(n);
        }
    }
    R.accepted = R.is_galois && R.class_number_one && R.epsilon.has_value();
    return R;
}

FamilyTable build_family_table(const NumberField& K, i64 X) {
    if (K.n > 2) throw FamilyError("family enumeration is restricted to degree <= 2 base fields");
    if (X > 100000000) throw FamilyError("X exceeds the configured cap 1e8");
    BaseFieldReport rep = check_base_field(K);
    if (!rep.accepted) throw FamilyError("base field not accepted");

    FamilyTable T;
    T.K = &K;
    T.X = X;
    if (X < 2) return T;
    Mod4Units U(K);
    PrimeSieve sieve(std::max<i64>(X, 3));
    sieve.for_primes([&](i64 p) {
        if (p == 2) return;
        if (K.n == 2 && i128(p) * p > X && legendre_int(K.field_disc, p) != 1 && K.field_disc % p != 0)
            return;  // inert with norm beyond X
        for (const auto& P : factor_rational_prime(p, K)) {
            if (P.norm() > X) continue;
            if (!is_in_PK_impl(K, P, U)) continue;
            FamilyPrime fp;
            fp.P = P;
            fp.ideal = ideal_from_prime(K, P);
            fp.norm = P.norm();
            fp.gen = principal_generator(K, fp.ideal);
            T.primes.push_back(std::move(fp));
        }
    });
    std::sort(T.primes.begin(), T.primes.end(), [](const FamilyPrime& a, const FamilyPrime& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return hnf_lex_compare(a.ideal, b.ideal) < 0;
    });
    return T;
}

void family_dfs(const FamilyTable& T, i64 X,
                const std::function<void(i64, const int*, int)>& visit,
                int root_lo, int root_hi) {
    const int n = int(T.primes.size());
    if (root_hi < 0 || root_hi > n) root_hi = n;
    int idxs[kMaxOmega];
    // recursion depth is omega <= 8
    const std::function<void(int, int, i64)> rec = [&](int start, int depth, i64 prod) {
        for (int i = start; i < n; ++i) {
            i64 nm = T.primes[size_t(i)].norm;
            if (i128(prod) * nm > X) break;
            if (depth >= kMaxOmega) die("family_dfs: omega exceeds the supported maximum");
            idxs[depth] = i;
            i64 np = prod * nm;
            visit(np, idxs, depth + 1);
            rec(i + 1, depth + 1, np);
        }
    };
    for (int r = root_lo; r < root_hi; ++r) {
        i64 nm = T.primes[size_t(r)].norm;
        if (nm > X) break;
        idxs[0] = r;
        visit(nm, idxs, 1);
        rec(r + 1, 1, nm);
    }
}

FamilyItem make_family_item(const FamilyTable& T, const int* idxs, int omega) {
    const NumberField& K = *T.K;
    FamilyItem it;
    it.omega = omega;
    it.norm = 1;
    Ideal prod = ideal_unit(K);
    FieldElement g = fe(1);
    for (int i = 0; i < omega; ++i) {
        const FamilyPrime& fp = T.primes[size_t(idxs[i])];
        it.prime_idx[size_t(i)] = idxs[i];
        it.norm = to_i64(mul_i128(it.norm, fp.norm));
        prod = ideal_mul(K, prod, fp.ideal);
        g = fmul(K, g, fp.gen);
    }
    it.ideal = prod;
    FieldElement can = canonical_unit_rep(K, g);
    if (smith_check(K, can)) {
        it.alpha = can;
    } else {
        FieldElement a2 = fmul(K, can, *K.epsilon);
        if (!smith_check(K, a2)) die("make_family_item: Smith normalization failed");
        it.alpha = a2;
    }
    return it;
}

std::vector<FamilyItem> enumerate_W(const FamilyTable& T, i64 X) {
    std::vector<FamilyItem> out;
    family_dfs(T, X, [&](i64, const int* idxs, int omega) {
        out.push_back(make_family_item(T, idxs, omega));
    });
    std::sort(out.begin(), out.end(), [](const FamilyItem& a, const FamilyItem& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return hnf_lex_compare(a.ideal, b.ideal) < 0;
    });
    return out;
}

std::vector<FamilyItem> enumerate_W(const NumberField& K, i64 X) {
    FamilyTable T = build_family_table(K, X);
    return enumerate_W(T, X);
}

const std::vector<FieldPreset>& field_presets() {
    static const std::vector<FieldPreset> presets = [] {
        std::vector<FieldPreset> v;
        v.push_back({"Q", {0, 1}, "rationals"});
        v.push_back({"Q(i)", {1, 0, 1}, "Gaussian field"});
        v.push_back({"Q(sqrt-5)", {5, 0, 1}, "class number two (rejected)"});
        auto addq = [&](i64 d) {
            i64 s = d;
            for (i64 q = 2; q * q <= s; ++q)
                while (s % (q * q) == 0) s /= q * q;
            std::string note = s == d ? "real quadratic" : "square part stripped to sqrt" + std::to_string(s);
            v.push_back({"Q(sqrt" + std::to_string(d) + ")", {-s, 0, 1}, note});
        };
        addq(3);
        for (i64 d : {7, 11, 19, 23, 27, 31, 43, 47, 59, 63, 67, 71, 75, 83, 99}) addq(d);
        const std::vector<std::array<i64, 2>> cubics = {
            {-10, -8}, {-14, 8}, {-36, -4}, {-42, 80}, {-52, 64}, {-74, -256}, {-76, -212},
            {-94, 304}, {-102, -216}, {-144, -16}, {-146, -504}, {-152, -220}, {-166, 536}, {-200, 512}};
        for (size_t i = 0; i < cubics.size(); ++i)
            v.push_back({"cubic-" + std::to_string(i + 1),
                         {cubics[i][1], cubics[i][0], 1, 1},
                         "Galois cubic, 2 splits"});
        return v;
    }();
    return presets;
}

std::vector<i64> preset_poly(const std::string& name) {
    for (const auto& p : field_presets())
        if (p.name == name) return p.poly;
    throw FieldError("unknown preset '" + name + "'");
}

}  // namespace quadfam
