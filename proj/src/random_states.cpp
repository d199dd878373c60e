#include "uncert/random_states.hpp"

#include <cmath>
#include <vector>

namespace uncert {

namespace {

std::vector<std::uint32_t> seed_words(std::uint64_t seed) {
  return {static_cast<std::uint32_t>(seed & 0xffffffffu),
          static_cast<std::uint32_t>(seed >> 32)};
}

constexpr int kMaxPerpAttempts = 16;

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::seed_seq& seq)
    : seed_(seed), engine_(seq) {}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
  const auto words = seed_words(seed);
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

RandomSource RandomSource::for_stream(std::uint64_t seed, std::uint64_t stream) {
  auto words = seed_words(seed);
  words.push_back(static_cast<std::uint32_t>(stream & 0xffffffffu));
  words.push_back(static_cast<std::uint32_t>(stream >> 32));
  words.push_back(0x9e3779b9u);  // keeps stream 0 distinct from the plain seed
  std::seed_seq seq(words.begin(), words.end());
  return RandomSource(seed, seq);
}

double RandomSource::normal() { return normal_(engine_); }

double RandomSource::uniform() { return uniform_(engine_); }

Complex RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix g = u.adjoint() * u;
  return max_abs(g - ComplexMatrix::Identity(u.rows(), u.cols()));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix entries, double tol) : u_(std::move(entries)) {
  if (u_.rows() != u_.cols()) throw ValidationError("unitary matrix is not square");
  if (!(unitarity_defect(u_) < tol)) throw ValidationError("matrix is not unitary");
}

UnitaryMatrix haar_unitary(Eigen::Index dim, RandomSource& rng) {
  if (dim < 2) throw ValidationError("Haar unitary needs dim >= 2");
  ComplexMatrix z(dim, dim);
  // column-major fill keeps the draw order fixed
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) z(r, c) = rng.complex_normal();

  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(k) *= d / ad;
  }
  return UnitaryMatrix(std::move(q));
}

StateVector random_perp(const StateVector& psi, RandomSource& rng) {
  for (int attempt = 0; attempt < kMaxPerpAttempts; ++attempt) {
    const UnitaryMatrix u = haar_unitary(psi.dim(), rng);
    const ComplexVector v = project_out(psi, u.matrix().col(0));
    if (v.norm() > kNullNorm) return normalize(v);
  }
  throw ValidationError("random_perp: projected vector vanished on every resample; "
                        "random source is broken");
}

StateVector theta_state(double theta) { return theta_family_state(3, theta); }

StateVector theta_family_state(Eigen::Index dim, double theta) {
  if (!std::isfinite(theta)) throw ValidationError("theta must be finite");
  if (dim < 2) throw ValidationError("state dimension must be at least 2");
  ComplexVector v = ComplexVector::Ones(dim);
  v[0] = std::cos(theta);
  v[dim - 1] = std::sin(theta);
  return normalize(v);
}

StateVector random_state(Eigen::Index dim, RandomSource& rng) {
  ComplexVector v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v[k] = rng.complex_normal();
  return normalize(v);
}

HermitianOperator random_hermitian(Eigen::Index dim, RandomSource& rng) {
  ComplexMatrix m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) m(r, c) = rng.complex_normal();
  const ComplexMatrix adj = m.adjoint();
  return HermitianOperator((m + adj) / 2.0);
}

}  // namespace uncert
