#include "qmsd/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qmsd {

namespace {

constexpr std::size_t kProjectorBudget = 5;  // 3^n <= 243
constexpr std::size_t kAppendixBudget = 4;   // 9^n phase-space points

void require_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) throw Error("heisenberg_weyl: p must be an odd prime");
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw Error("heisenberg_weyl: p must be an odd prime");
}

std::complex<double> omega_pow(int p, long e) {
    long m = ((e % p) + p) % p;
    return std::polar(1.0, 2.0 * M_PI * double(m) / double(p));
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    DenseOperator r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

// Displacements are monomial matrices: column c maps to row perm[c] with
// factor phase[c]. Conjugating by them costs O(d^2) instead of O(d^3).
struct Monomial {
    std::vector<std::size_t> perm;
    std::vector<std::complex<double>> phase;

    std::size_t dim() const { return perm.size(); }

    DenseOperator dense() const {
        DenseOperator m = DenseOperator::Zero(Eigen::Index(dim()), Eigen::Index(dim()));
        for (std::size_t c = 0; c < dim(); ++c) m(Eigen::Index(perm[c]), Eigen::Index(c)) = phase[c];
        return m;
    }
};

// Z acts as diag(w^-k): with the shift-up X this is the orientation for
// which D(a)D(b) = w^(2^-1 [a,b]) D(a+b) holds with [a,b] = ua.vb - ub.va;
// the diag(w^k) orientation flips the law's sign and breaks antisymmetry.
Monomial displacement_monomial(int p, int u, int v) {
    int inv2 = (p + 1) / 2;
    int uu = ((u % p) + p) % p, vv = ((v % p) + p) % p;
    Monomial m;
    m.perm.resize(std::size_t(p));
    m.phase.resize(std::size_t(p));
    for (int k = 0; k < p; ++k) {
        m.perm[std::size_t(k)] = std::size_t((k + uu) % p);
        m.phase[std::size_t(k)] = omega_pow(p, -long(vv) * k - long(inv2) * uu * vv);
    }
    return m;
}

// Site 0 is the most significant tensor factor, matching kron order.
Monomial displacement_monomial_vec(int p, const FFVector& u, const FFVector& v) {
    std::size_t n = u.size();
    std::vector<Monomial> site(n);
    for (std::size_t i = 0; i < n; ++i) site[i] = displacement_monomial(p, u[i], v[i]);
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= std::size_t(p);
    Monomial m;
    m.perm.resize(dim);
    m.phase.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t rest = c, row = 0;
        std::complex<double> ph = 1.0;
        std::size_t scale = dim;
        for (std::size_t i = 0; i < n; ++i) {
            scale /= std::size_t(p);
            std::size_t digit = rest / scale;
            rest %= scale;
            row += site[i].perm[digit] * scale;
            ph *= site[i].phase[digit];
        }
        m.perm[c] = row;
        m.phase[c] = ph;
    }
    return m;
}

// D^-1 M D for a monomial D
DenseOperator conjugate_by(const Monomial& d, const DenseOperator& m) {
    std::size_t dim = d.dim();
    DenseOperator r = DenseOperator::Zero(Eigen::Index(dim), Eigen::Index(dim));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            r(Eigen::Index(a), Eigen::Index(b)) = std::conj(d.phase[a]) *
                m(Eigen::Index(d.perm[a]), Eigen::Index(d.perm[b])) * d.phase[b];
    return r;
}

double trace_product_dev(const DenseOperator& a, const DenseOperator& b,
                         std::complex<double> expected) {
    std::complex<double> t = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return std::abs(t - expected);
}

bool in_dual(const StabilizerCode& code, const SymplecticVector& chi) {
    for (std::size_t i = 0; i < code.r; ++i)
        if (symplectic_product(chi, code.row(i)) != 0) return false;
    return true;
}

}  // namespace

DenseOperator heisenberg_weyl(int p, int u, int v) {
    require_odd_prime(p);
    return displacement_monomial(p, u, v).dense();
}

DenseOperator heisenberg_weyl_vec(int p, const FFVector& u, const FFVector& v) {
    require_odd_prime(p);
    if (u.size() != v.size()) throw Error("heisenberg_weyl_vec: invalid-input");
    return displacement_monomial_vec(p, u, v).dense();
}

DenseOperator phase_point(int p, int u, int v) {
    require_odd_prime(p);
    DenseOperator a00 = DenseOperator::Zero(p, p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) a00 += heisenberg_weyl(p, a, b);
    a00 /= double(p);
    if (u % p == 0 && v % p == 0) return a00;
    DenseOperator d = heisenberg_weyl(p, u, v);
    return d * a00 * d.adjoint();
}

double wigner_value(const DenseOperator& rho, int p, int u, int v) {
    return ((rho * phase_point(p, u, v)).trace() / double(p)).real();
}

DenseOperator projector(const StabilizerCode& code) {
    if (code.n > kProjectorBudget)
        throw ResourceLimit("resource-limit: projector supports n <= " +
                            std::to_string(kProjectorBudget));
    std::size_t dim = 1;
    for (std::size_t i = 0; i < code.n; ++i) dim *= 3;
    DenseOperator sum = DenseOperator::Zero(Eigen::Index(dim), Eigen::Index(dim));
    std::vector<FFElement> digits(code.r, 0);
    double terms = 0;
    for (;;) {
        FFVector chi(2 * code.n, 0);
        for (std::size_t i = 0; i < code.r; ++i)
            for (std::size_t j = 0; j < 2 * code.n; ++j)
                chi[j] = ff_add(chi[j], ff_mul(digits[i], code.h.at(i, j)));
        SymplecticVector s = split_symplectic(chi);
        sum += displacement_monomial_vec(3, s.u, s.v).dense();
        terms += 1;
        std::size_t pos = 0;
        while (pos < code.r && digits[pos] == 2) digits[pos++] = 0;
        if (pos == code.r) break;
        ++digits[pos];
    }
    return sum / terms;
}

DenseOperator strange_state(double eps) {
    if (eps < 0.0 || eps > 1.0) throw Error("strange_state: out-of-range epsilon");
    Eigen::Vector3cd psi(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
    DenseOperator rho = (1.0 - eps) * (psi * psi.adjoint());
    rho += (eps / 3.0) * DenseOperator::Identity(3, 3);
    return rho;
}

double verify_theorem1(const StabilizerCode& code, const DenseOperator& rho) {
    if (code.n > kProjectorBudget)
        throw ResourceLimit("resource-limit: verify_theorem1 supports n <= " +
                            std::to_string(kProjectorBudget));
    DenseOperator rho_n = DenseOperator::Identity(1, 1);
    for (std::size_t i = 0; i < code.n; ++i) rho_n = kron(rho_n, rho);
    std::complex<double> lhs = (projector(code) * rho_n).trace();

    double wtab[3][3];
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) wtab[u][v] = wigner_value(rho, 3, u, v);

    const FFMatrix& dual = dual_basis(code).rows;
    std::vector<FFElement> digits(dual.n_rows, 0);
    double rhs = 0;
    for (;;) {
        FFVector chi(2 * code.n, 0);
        for (std::size_t i = 0; i < dual.n_rows; ++i)
            for (std::size_t j = 0; j < 2 * code.n; ++j)
                chi[j] = ff_add(chi[j], ff_mul(digits[i], dual.at(i, j)));
        double prod = 1;
        for (std::size_t i = 0; i < code.n; ++i)
            prod *= wtab[chi[i]][chi[code.n + i]];
        rhs += prod;
        std::size_t pos = 0;
        while (pos < dual.n_rows && digits[pos] == 2) digits[pos++] = 0;
        if (pos == dual.n_rows) break;
        ++digits[pos];
    }
    return std::abs(lhs - std::complex<double>(rhs, 0.0));
}

double verify_appendixA(const StabilizerCode& code) {
    if (code.n > kAppendixBudget)
        throw ResourceLimit("resource-limit: verify_appendixA supports n <= " +
                            std::to_string(kAppendixBudget));
    DenseOperator pi = projector(code);
    DenseOperator a00 = phase_point(3, 0, 0);
    DenseOperator a00n = DenseOperator::Identity(1, 1);
    for (std::size_t i = 0; i < code.n; ++i) a00n = kron(a00n, a00);

    double worst = 0;
    // membership pattern: tr(Pi A(chi)) = [chi in S-perp], all 9^n points
    std::size_t points = 1;
    for (std::size_t i = 0; i < code.n; ++i) points *= 9;
    std::vector<SymplecticVector> sample;
    std::size_t stride = std::max<std::size_t>(1, points / 64);
    for (std::size_t idx = 0; idx < points; ++idx) {
        SymplecticVector chi{FFVector(code.n), FFVector(code.n)};
        std::size_t rest = idx;
        for (std::size_t i = 0; i < code.n; ++i) {
            chi.u[i] = FFElement(rest % 9 / 3);
            chi.v[i] = FFElement(rest % 3);
            rest /= 9;
        }
        Monomial d = displacement_monomial_vec(3, chi.u, chi.v);
        // tr(Pi D A00n D^-1) = tr((D^-1 Pi D) A00n)
        DenseOperator conj_pi = conjugate_by(d, pi);
        double expected = in_dual(code, chi) ? 1.0 : 0.0;
        worst = std::max(worst, trace_product_dev(conj_pi, a00n, expected));
        if (idx % stride == 0) sample.push_back(chi);
    }
    // displaced-projector identity: M_i (D^-1 Pi D) = w^[chi,h_i] (D^-1 Pi D),
    // and tr(Pi^s A00^n) vanishes unless the syndrome is trivial
    for (const auto& chi : sample) {
        Monomial d = displacement_monomial_vec(3, chi.u, chi.v);
        DenseOperator pis = conjugate_by(d, pi);
        bool trivial = true;
        for (std::size_t i = 0; i < code.r; ++i) {
            SymplecticVector h = code.row(i);
            FFElement s = symplectic_product(chi, h);
            if (s != 0) trivial = false;
            Monomial mi = displacement_monomial_vec(3, h.u, h.v);
            DenseOperator lhs = mi.dense() * pis;
            DenseOperator rhs = omega_pow(3, s) * pis;
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
        worst = std::max(worst,
                         trace_product_dev(pis, a00n, trivial ? 1.0 : 0.0));
    }
    return worst;
}

OracleReport run_oracle_trials(int n_min, int n_max, int trials,
                               std::uint64_t seed, double tol) {
    if (n_min < 1 || n_max > int(kProjectorBudget) || n_min > n_max)
        throw Error("run_oracle_trials: invalid-input (n range)");
    std::mt19937_64 rng(seed);
    auto rand_int = [&](int lo, int hi) {
        return int(std::uniform_int_distribution<int>(lo, hi)(rng));
    };
    OracleReport report;
    for (int t = 0; t < trials; ++t) {
        int n = rand_int(n_min, n_max);
        int r_target = rand_int(1, n);
        // rejection-sample commuting independent rows
        std::vector<FFVector> rows;
        for (int attempts = 0; int(rows.size()) < r_target && attempts < 500; ++attempts) {
            FFVector cand(2 * std::size_t(n));
            for (auto& e : cand) e = FFElement(rand_int(0, 2));
            SymplecticVector cs = split_symplectic(cand);
            bool ok = false;
            for (const auto& e : cand) ok = ok || e != 0;
            for (const auto& row : rows)
                ok = ok && symplectic_product(cs, split_symplectic(row)) == 0;
            if (!ok) continue;
            std::vector<FFVector> next = rows;
            next.push_back(cand);
            if (ff_rank(FFMatrix::from_rows(next)) != next.size()) continue;
            rows = std::move(next);
        }
        FFMatrix h = rows.empty() ? FFMatrix(0, 2 * std::size_t(n))
                                  : FFMatrix::from_rows(rows);
        StabilizerCode code = make_stabilizer(h, "trial" + std::to_string(t));
        validate(code);
        // random unit-trace Hermitian operator, not necessarily positive
        std::normal_distribution<double> gauss(0.0, 1.0);
        DenseOperator g(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        DenseOperator rho = 0.5 * (g + g.adjoint());
        std::complex<double> tr = rho.trace();
        rho -= (tr / 3.0) * DenseOperator::Identity(3, 3);
        rho += DenseOperator::Identity(3, 3) / 3.0;
        double residual = verify_theorem1(code, rho);
        report.trials += 1;
        report.max_residual = std::max(report.max_residual, residual);
        if (residual > tol) report.failures += 1;
    }
    return report;
}

}  // namespace qmsd
