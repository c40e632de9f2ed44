// Times the serial and parallel Buchberger loops on the same inputs and
// checks that both land on the identical reduced basis.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cylcalc/groebner.hpp"
#include "cylcalc/polynomial.hpp"

using namespace cylcalc;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
#endif
}

// Cyclic-n style family: symmetric products of consecutive variables.
IdealPresentation cyclic_like(int n) {
    std::vector<Polynomial> gens;
    for (int d = 1; d < n; ++d) {
        Polynomial s;
        for (int i = 0; i < n; ++i) {
            Polynomial prod = Polynomial::constant(Rational(1));
            for (int j = 0; j < d; ++j)
                prod = prod * Polynomial::variable(VarIndex((i + j) % n));
            s = s + prod;
        }
        gens.push_back(s);
    }
    Polynomial prod_all = Polynomial::constant(Rational(1));
    for (int i = 0; i < n; ++i) prod_all = prod_all * Polynomial::variable(VarIndex(i));
    gens.push_back(prod_all - Polynomial::constant(Rational(1)));
    return IdealPresentation(VarSet::range(0, VarIndex(n - 1)), std::move(gens));
}

// Katsura-n style family: quadratic magnetization equations.
IdealPresentation katsura_like(int n) {
    auto u = [&](int i) {
        int k = i < 0 ? -i : i;
        if (k > n) return Polynomial();
        return Polynomial::variable(VarIndex(k));
    };
    std::vector<Polynomial> gens;
    for (int m = 0; m < n; ++m) {
        Polynomial s;
        for (int i = -n; i <= n; ++i) {
            Polynomial a = u(i), b = u(m - i);
            if (a.is_zero() || b.is_zero()) continue;
            s = s + a * b;
        }
        gens.push_back(s - u(m));
    }
    Polynomial total = u(0) - Polynomial::constant(Rational(1));
    for (int i = 1; i <= n; ++i) total = total + Polynomial::constant(Rational(2)) * u(i);
    gens.push_back(total);
    return IdealPresentation(VarSet::range(0, VarIndex(n)), std::move(gens));
}

// Dense random quadrics with small coefficients; the seed pins the instance.
IdealPresentation random_quadrics(int nvars, int ngens, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Polynomial> gens;
    for (int g = 0; g < ngens; ++g) {
        Polynomial p;
        for (int i = 0; i < nvars; ++i) {
            for (int j = i; j < nvars; ++j) {
                int c = coeff(rng);
                if (c == 0) continue;
                p = p + Polynomial::constant(Rational(c)) * Polynomial::variable(VarIndex(i)) *
                            Polynomial::variable(VarIndex(j));
            }
        }
        for (int i = 0; i < nvars; ++i) {
            int c = coeff(rng);
            if (c == 0) continue;
            p = p + Polynomial::constant(Rational(c)) * Polynomial::variable(VarIndex(i));
        }
        p = p + Polynomial::constant(Rational(coeff(rng)));
        if (p.is_zero()) p = Polynomial::variable(VarIndex(g % nvars));
        gens.push_back(p);
    }
    return IdealPresentation(VarSet::range(0, VarIndex(nvars - 1)), std::move(gens));
}

struct Row {
    std::string name;
    double serial = 0, parallel = 0;
    std::size_t basis_size = 0;
    bool agree = false;
};

Row run_case(const std::string& name, const IdealPresentation& ideal) {
    Row row;
    row.name = name;
    double t0 = now_seconds();
    GroebnerBasis s = groebner_basis(ideal, MonomialOrder::grevlex(), GbEngine::Serial);
    double t1 = now_seconds();
    GroebnerBasis p = groebner_basis(ideal, MonomialOrder::grevlex(), GbEngine::Parallel);
    double t2 = now_seconds();
    row.serial = t1 - t0;
    row.parallel = t2 - t1;
    row.basis_size = s.elements.size();
    row.agree = s.elements.size() == p.elements.size();
    for (std::size_t i = 0; row.agree && i < s.elements.size(); ++i)
        row.agree = s.elements[i].to_string() == p.elements[i].to_string();
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    int scale = 1;
    if (argc > 1) scale = std::max(1, std::atoi(argv[1]));

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif

    std::vector<Row> rows;
    rows.push_back(run_case("cyclic-5", cyclic_like(5)));
    rows.push_back(run_case("cyclic-6", cyclic_like(6)));
    rows.push_back(run_case("katsura-5", katsura_like(5)));
    rows.push_back(run_case("katsura-6", katsura_like(6)));
    for (int i = 0; i < scale; ++i) {
        rows.push_back(run_case("quadrics-4x4 #" + std::to_string(i + 1),
                                random_quadrics(4, 4, 1000 + i)));
        rows.push_back(run_case("quadrics-5x4 #" + std::to_string(i + 1),
                                random_quadrics(5, 4, 2000 + i)));
    }

    std::cout << std::left << std::setw(18) << "case" << std::right << std::setw(12)
              << "serial[s]" << std::setw(12) << "parallel[s]" << std::setw(10) << "speedup"
              << std::setw(8) << "size" << std::setw(8) << "agree" << "\n";
    bool all_agree = true;
    for (const auto& r : rows) {
        double speedup = r.parallel > 0 ? r.serial / r.parallel : 0;
        std::cout << std::left << std::setw(18) << r.name << std::right << std::fixed
                  << std::setprecision(4) << std::setw(12) << r.serial << std::setw(12)
                  << r.parallel << std::setprecision(2) << std::setw(10) << speedup
                  << std::setw(8) << r.basis_size << std::setw(8) << (r.agree ? "yes" : "NO")
                  << "\n";
        all_agree = all_agree && r.agree;
    }
    if (!all_agree) {
        std::cout << "engines disagree\n";
        return 1;
    }
    return 0;
}
