#include "phasepoint/fieldvec.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "phasepoint/errors.hpp"
#include "phasepoint/numtheory.hpp"

namespace phasepoint {

DimContext::DimContext(int p, int n) : p_(p), n_(n), q_(1) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::OutOfRange, "p = " + std::to_string(p) + " is not prime");
  }
  if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
  const auto q = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n), 1u << 20);
  if (!q) throw Error(ErrorCode::OutOfRange, "q = p^n exceeds 2^20");
  q_ = static_cast<int>(*q);
}

DimContext context_for_dimension(int d) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "dimension must be at least 2");
  int p = 2;
  while (d % p != 0) ++p;
  int n = 0;
  int rest = d;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw Error(ErrorCode::OutOfRange, std::to_string(d) + " is not a prime power");
  return DimContext(p, n);
}

void require_same_context(const DimContext& a, const DimContext& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::ContextMismatch, "contexts (p=" + std::to_string(a.p()) + ", n=" +
                                                std::to_string(a.n()) + ") and (p=" +
                                                std::to_string(b.p()) + ", n=" +
                                                std::to_string(b.n()) + ") differ");
  }
}

// ---------------------------------------------------------------------------
// FpVector

FpVector::FpVector(const DimContext& ctx, std::vector<int> reduced)
    : ctx_(ctx), entries_(std::move(reduced)) {}

FpVector::FpVector(const DimContext& ctx, std::span<const long long> entries) : ctx_(ctx) {
  if (static_cast<int>(entries.size()) != ctx.two_n()) {
    throw Error(ErrorCode::ShapeError, "label must have 2n entries");
  }
  entries_.reserve(entries.size());
  for (long long e : entries) entries_.push_back(ctx.reduce(e));
}

FpVector::FpVector(const DimContext& ctx, std::initializer_list<long long> entries)
    : FpVector(ctx, std::span<const long long>(entries.begin(), entries.size())) {}

FpVector FpVector::zero(const DimContext& ctx) {
  return FpVector(ctx, std::vector<int>(static_cast<std::size_t>(ctx.two_n()), 0));
}

FpVector FpVector::unit(const DimContext& ctx, int k) {
  std::vector<int> e(static_cast<std::size_t>(ctx.two_n()), 0);
  e.at(static_cast<std::size_t>(k)) = 1;
  return FpVector(ctx, std::move(e));
}

FpVector FpVector::from_index(const DimContext& ctx, std::size_t index) {
  std::vector<int> e(static_cast<std::size_t>(ctx.two_n()), 0);
  for (int i = ctx.two_n() - 1; i >= 0; --i) {
    e[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(ctx.p()));
    index /= static_cast<std::size_t>(ctx.p());
  }
  return FpVector(ctx, std::move(e));
}

bool FpVector::is_zero() const noexcept {
  for (int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

std::size_t FpVector::index() const noexcept {
  std::size_t idx = 0;
  for (int e : entries_) idx = idx * static_cast<std::size_t>(ctx_.p()) + static_cast<std::size_t>(e);
  return idx;
}

FpVector FpVector::operator+(const FpVector& o) const {
  require_same_context(ctx_, o.ctx_);
  std::vector<int> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = ctx_.reduce(entries_[i] + o.entries_[i]);
  return FpVector(ctx_, std::move(e));
}

FpVector FpVector::operator-(const FpVector& o) const { return *this + (-o); }

FpVector FpVector::operator-() const { return scaled(-1); }

FpVector FpVector::scaled(long long s) const {
  std::vector<int> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = ctx_.reduce(s * entries_[i]);
  return FpVector(ctx_, std::move(e));
}

std::string to_string(const FpVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(const DimContext& ctx, std::vector<int> reduced)
    : ctx_(ctx), entries_(std::move(reduced)) {}

FpMatrix::FpMatrix(const DimContext& ctx, std::span<const long long> row_major) : ctx_(ctx) {
  const auto s = static_cast<std::size_t>(ctx.two_n());
  if (row_major.size() != s * s) throw Error(ErrorCode::ShapeError, "matrix must be 2n x 2n");
  entries_.reserve(row_major.size());
  for (long long e : row_major) entries_.push_back(ctx.reduce(e));
}

FpMatrix::FpMatrix(const DimContext& ctx, std::initializer_list<long long> row_major)
    : FpMatrix(ctx, std::span<const long long>(row_major.begin(), row_major.size())) {}

FpMatrix FpMatrix::identity(const DimContext& ctx) { return scalar(ctx, 1); }

FpMatrix FpMatrix::scalar(const DimContext& ctx, long long s) {
  const int size = ctx.two_n();
  std::vector<int> e(static_cast<std::size_t>(size * size), 0);
  for (int i = 0; i < size; ++i) e[static_cast<std::size_t>(i * size + i)] = ctx.reduce(s);
  return FpMatrix(ctx, std::move(e));
}

FpMatrix FpMatrix::from_columns(const DimContext& ctx, std::span<const FpVector> columns) {
  const int size = ctx.two_n();
  if (static_cast<int>(columns.size()) != size) throw Error(ErrorCode::ShapeError, "need 2n columns");
  std::vector<int> e(static_cast<std::size_t>(size * size));
  for (int c = 0; c < size; ++c) {
    require_same_context(ctx, columns[static_cast<std::size_t>(c)].ctx());
    for (int r = 0; r < size; ++r) e[static_cast<std::size_t>(r * size + c)] = columns[static_cast<std::size_t>(c)][r];
  }
  return FpMatrix(ctx, std::move(e));
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  require_same_context(ctx_, o.ctx_);
  const int s = size();
  std::vector<int> e(static_cast<std::size_t>(s * s));
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      long long acc = 0;
      for (int k = 0; k < s; ++k) acc += static_cast<long long>((*this)(r, k)) * o(k, c);
      e[static_cast<std::size_t>(r * s + c)] = ctx_.reduce(acc);
    }
  }
  return FpMatrix(ctx_, std::move(e));
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  require_same_context(ctx_, v.ctx());
  const int s = size();
  std::vector<long long> e(static_cast<std::size_t>(s));
  for (int r = 0; r < s; ++r) {
    long long acc = 0;
    for (int k = 0; k < s; ++k) acc += static_cast<long long>((*this)(r, k)) * v[k];
    e[static_cast<std::size_t>(r)] = acc;
  }
  return FpVector(ctx_, e);
}

FpVector FpMatrix::column(int k) const {
  std::vector<long long> e(static_cast<std::size_t>(size()));
  for (int r = 0; r < size(); ++r) e[static_cast<std::size_t>(r)] = (*this)(r, k);
  return FpVector(ctx_, e);
}

FpMatrix FpMatrix::transpose() const {
  const int s = size();
  std::vector<int> e(entries_.size());
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) e[static_cast<std::size_t>(c * s + r)] = (*this)(r, c);
  }
  return FpMatrix(ctx_, std::move(e));
}

bool FpMatrix::is_identity() const noexcept {
  const int s = size();
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

std::uint64_t FpMatrix::order(std::uint64_t limit) const {
  ModpMatrix m{ctx_.p(), size(), {entries_.begin(), entries_.end()}};
  (void)modp_inverse(m);  // throws if singular
  FpMatrix power = *this;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = power * *this;
  }
  throw Error(ErrorCode::OutOfRange, "matrix order exceeds limit");
}

std::string FpMatrix::key() const {
  std::string k;
  k.reserve(entries_.size() * 3);
  for (int e : entries_) {
    k += std::to_string(e);
    k += ',';
  }
  return k;
}

std::string to_string(const FpMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < m.size(); ++r) {
    if (r) os << ';';
    for (int c = 0; c < m.size(); ++c) os << (c ? " " : "") << m(r, c);
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Small mod-p linear algebra

long long modp_inverse(long long a, int p) {
  a %= p;
  if (a < 0) a += p;
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    const long long qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (r != 1) throw Error(ErrorCode::OutOfRange, "element not invertible mod p");
  return t < 0 ? t + p : t;
}

ModpMatrix modp_multiply(const ModpMatrix& x, const ModpMatrix& y) {
  ModpMatrix out{x.p, x.rows, std::vector<int>(x.a.size(), 0)};
  for (int r = 0; r < x.rows; ++r) {
    for (int c = 0; c < x.rows; ++c) {
      long long acc = 0;
      for (int k = 0; k < x.rows; ++k) acc += static_cast<long long>(x.at(r, k)) * y.at(k, c);
      out.at(r, c) = static_cast<int>(acc % x.p);
    }
  }
  return out;
}

ModpMatrix modp_inverse(const ModpMatrix& m) {
  const int n = m.rows;
  const int p = m.p;
  ModpMatrix a = m;
  ModpMatrix inv{p, n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorCode::OutOfRange, "singular matrix mod p");
    for (int c = 0; c < n; ++c) {
      std::swap(a.at(col, c), a.at(pivot, c));
      std::swap(inv.at(col, c), inv.at(pivot, c));
    }
    const long long s = modp_inverse(a.at(col, col), p);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) = static_cast<int>(a.at(col, c) * s % p);
      inv.at(col, c) = static_cast<int>(inv.at(col, c) * s % p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const long long f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) = static_cast<int>(((a.at(r, c) - f * a.at(col, c)) % p + p) % p);
        inv.at(r, c) = static_cast<int>(((inv.at(r, c) - f * inv.at(col, c)) % p + p) % p);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Symplectic structure

int symplectic_form(const FpVector& u, const FpVector& v) {
  require_same_context(u.ctx(), v.ctx());
  const int n = u.ctx().n();
  long long acc = 0;
  for (int j = 0; j < n; ++j) acc += static_cast<long long>(u[j]) * v[n + j] - static_cast<long long>(u[n + j]) * v[j];
  return u.ctx().reduce(acc);
}

bool is_symplectic(const FpMatrix& m) {
  const DimContext& ctx = m.ctx();
  std::vector<FpVector> images;
  for (int k = 0; k < ctx.two_n(); ++k) images.push_back(m.column(k));
  for (int a = 0; a < ctx.two_n(); ++a) {
    for (int b = 0; b < ctx.two_n(); ++b) {
      const int lhs = symplectic_form(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
      const int rhs = symplectic_form(FpVector::unit(ctx, a), FpVector::unit(ctx, b));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::uint64_t symplectic_group_order(int n, int p) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  const auto lead = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n * n), limit);
  if (!lead) throw Error(ErrorCode::OutOfRange, "|Sp(2n,p)| overflows");
  std::uint64_t order = *lead;
  for (int i = 1; i <= n; ++i) {
    const auto pw = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(2 * i), limit);
    if (!pw) throw Error(ErrorCode::OutOfRange, "|Sp(2n,p)| overflows");
    const std::uint64_t f = *pw - 1;
    if (order > limit / f) throw Error(ErrorCode::OutOfRange, "|Sp(2n,p)| overflows");
    order *= f;
  }
  return order;
}

std::vector<FpMatrix> generate_matrix_group(std::span<const FpMatrix> gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::ShapeError, "need at least one generator");
  const DimContext ctx = gens.front().ctx();
  for (const auto& g : gens) {
    require_same_context(ctx, g.ctx());
    ModpMatrix m{ctx.p(), g.size(), {g.entries().begin(), g.entries().end()}};
    (void)modp_inverse(m);
  }
  std::vector<FpMatrix> elements{FpMatrix::identity(ctx)};
  std::unordered_set<std::string> seen{elements.front().key()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      FpMatrix next = elements[head] * g;
      if (seen.insert(next.key()).second) {
        if (elements.size() >= cap) {
          throw Error(ErrorCode::GroupTooLarge, "matrix group exceeds cap of " + std::to_string(cap));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

bool is_transitive_on_nonzero(std::span<const FpMatrix> group_or_gens) {
  if (group_or_gens.empty()) return false;
  const DimContext ctx = group_or_gens.front().ctx();
  std::size_t total = 1;
  for (int i = 0; i < ctx.two_n(); ++i) total *= static_cast<std::size_t>(ctx.p());
  std::vector<char> seen(total, 0);
  std::deque<FpVector> queue{FpVector::unit(ctx, 0)};
  seen[queue.front().index()] = 1;
  std::size_t orbit = 1;
  while (!queue.empty()) {
    const FpVector v = queue.front();
    queue.pop_front();
    for (const auto& g : group_or_gens) {
      FpVector w = g * v;
      if (!seen[w.index()]) {
        seen[w.index()] = 1;
        ++orbit;
        queue.push_back(std::move(w));
      }
    }
  }
  return orbit == total - 1;
}

bool contains_central_involution(std::span<const FpMatrix> group_or_gens, GroupForm form,
                                 std::size_t cap) {
  if (group_or_gens.empty()) throw Error(ErrorCode::ShapeError, "empty group");
  const DimContext ctx = group_or_gens.front().ctx();
  if (ctx.p() == 2) {
    throw Error(ErrorCode::NotDefinedForEvenPrime, "-1 equals the identity over F_2");
  }
  const FpMatrix minus_one = FpMatrix::scalar(ctx, -1);
  for (const auto& g : group_or_gens) {
    if (g == minus_one) return true;
  }
  if (form == GroupForm::Closed) return false;
  for (const auto& g : generate_matrix_group(group_or_gens, cap)) {
    if (g == minus_one) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Extension fields

namespace {

using Poly = std::vector<int>;  // low to high

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, std::span<const int> b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& t = a[static_cast<std::size_t>(i - db + j)];
      t = static_cast<int>(((t - static_cast<long long>(c) * b[static_cast<std::size_t>(j)]) % p + p) % p);
    }
  }
  a.resize(static_cast<std::size_t>(std::max(db, 0)));
  return a;
}

// Element of F_p[x]/(f) times x.
Poly times_x(const Poly& v, std::span<const int> f, int p) {
  const int k = static_cast<int>(v.size());
  const int lead = v[static_cast<std::size_t>(k - 1)];
  Poly out(v.size(), 0);
  for (int i = k - 1; i >= 1; --i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)];
  for (int i = 0; i < k; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(
        ((out[static_cast<std::size_t>(i)] - static_cast<long long>(lead) * f[static_cast<std::size_t>(i)]) % p + p) % p);
  }
  return out;
}

// Regular representation of a in basis 1, x, ..., x^{k-1}; column s holds a x^s.
ModpMatrix regular_matrix(const Poly& a, std::span<const int> f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  ModpMatrix m{p, k, std::vector<int>(static_cast<std::size_t>(k * k), 0)};
  Poly v = a;
  for (int s = 0; s < k; ++s) {
    for (int r = 0; r < k; ++r) m.at(r, s) = v[static_cast<std::size_t>(r)];
    v = times_x(v, f, p);
  }
  return m;
}

Poly basis_power(int e, std::span<const int> f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  Poly v(static_cast<std::size_t>(k), 0);
  v[0] = 1;
  for (int i = 0; i < e; ++i) v = times_x(v, f, p);
  return v;
}

// 2m x 2m matrix over F_{p^k}, entries as polynomials of length k.
struct ExtMatrix {
  int size;
  std::vector<Poly> e;

  ExtMatrix(int size_, int k) : size(size_), e(static_cast<std::size_t>(size_ * size_), Poly(static_cast<std::size_t>(k), 0)) {
    for (int i = 0; i < size; ++i) at(i, i)[0] = 1;
  }
  Poly& at(int r, int c) { return e[static_cast<std::size_t>(r * size + c)]; }
};

}  // namespace

bool is_irreducible(std::span<const int> monic, int p) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k < 1) return false;
  for (int d = 1; 2 * d <= k; ++d) {
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
    for (std::size_t idx = 0; idx < count; ++idx) {
      Poly divisor(static_cast<std::size_t>(d + 1), 0);
      divisor[static_cast<std::size_t>(d)] = 1;
      std::size_t t = idx;
      for (int i = 0; i < d; ++i) {
        divisor[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::size_t>(p));
        t /= static_cast<std::size_t>(p);
      }
      const Poly r = poly_mod(Poly(monic.begin(), monic.end()), divisor, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> first_irreducible_polynomial(int p, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "degree must be positive");
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(p);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Poly f(static_cast<std::size_t>(k + 1), 0);
    f[static_cast<std::size_t>(k)] = 1;
    std::size_t t = idx;
    for (int i = 0; i < k; ++i) {  // c_0 is the least significant digit
      f[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::size_t>(p));
      t /= static_cast<std::size_t>(p);
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::PolynomialSearchFailed,
              "no monic irreducible polynomial of degree " + std::to_string(k) + " over F_" + std::to_string(p));
}

ExtensionEmbedding embed_extension_field_symplectic(int m, int k, const DimContext& ctx) {
  if (m < 1 || k < 1) throw Error(ErrorCode::OutOfRange, "m and k must be positive");
  if (m * k != ctx.n()) throw Error(ErrorCode::ContextMismatch, "embedding requires m k = n");
  const int p = ctx.p();
  ExtensionEmbedding out;
  out.m = m;
  out.k = k;
  out.polynomial = first_irreducible_polynomial(p, k);
  const std::span<const int> f(out.polynomial);

  // Generators over F_{p^k}: Fourier, shears by basis elements, CZ by basis elements.
  std::vector<ExtMatrix> gens;
  const int two_m = 2 * m;
  for (int j = 0; j < m; ++j) {
    ExtMatrix g(two_m, k);
    g.at(j, j)[0] = 0;
    g.at(m + j, m + j)[0] = 0;
    g.at(m + j, j)[0] = 1;      // x_j -> z_j
    g.at(j, m + j)[0] = p - 1;  // z_j -> -x_j
    gens.push_back(std::move(g));
  }
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < k; ++i) {
      ExtMatrix g(two_m, k);
      g.at(m + j, j) = basis_power(i, f, p);
      gens.push_back(std::move(g));
    }
  }
  for (int j = 0; j + 1 < m; ++j) {
    for (int i = 0; i < k; ++i) {
      ExtMatrix g(two_m, k);
      g.at(m + j + 1, j) = basis_power(i, f, p);
      g.at(m + j, j + 1) = basis_power(i, f, p);
      gens.push_back(std::move(g));
    }
  }

  // Trace form Gram matrix T_rs = Tr(x^{r+s}) and the change of basis
  // P = diag(I, I_m (x) T^{-1}).
  ModpMatrix trace_gram{p, k, std::vector<int>(static_cast<std::size_t>(k * k), 0)};
  for (int r = 0; r < k; ++r) {
    for (int s = 0; s < k; ++s) {
      const ModpMatrix reg = regular_matrix(basis_power(r + s, f, p), f, p);
      long long tr = 0;
      for (int i = 0; i < k; ++i) tr += reg.at(i, i);
      trace_gram.at(r, s) = static_cast<int>(tr % p);
    }
  }
  const ModpMatrix trace_gram_inv = modp_inverse(trace_gram);
  const int size = 2 * m * k;
  ModpMatrix P{p, size, std::vector<int>(static_cast<std::size_t>(size * size), 0)};
  ModpMatrix P_inv = P;
  for (int i = 0; i < m * k; ++i) {
    P.at(i, i) = 1;
    P_inv.at(i, i) = 1;
  }
  for (int b = 0; b < m; ++b) {
    const int off = m * k + b * k;
    for (int r = 0; r < k; ++r) {
      for (int s = 0; s < k; ++s) {
        P.at(off + r, off + s) = trace_gram_inv.at(r, s);
        P_inv.at(off + r, off + s) = trace_gram.at(r, s);
      }
    }
  }
  out.change_of_basis = P;

  for (auto& g : gens) {
    ModpMatrix expanded{p, size, std::vector<int>(static_cast<std::size_t>(size * size), 0)};
    for (int r = 0; r < two_m; ++r) {
      for (int c = 0; c < two_m; ++c) {
        const ModpMatrix block = regular_matrix(g.at(r, c), f, p);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) expanded.at(r * k + i, c * k + j) = block.at(i, j);
        }
      }
    }
    const ModpMatrix conj = modp_multiply(modp_multiply(P_inv, expanded), P);
    out.generators.emplace_back(ctx, std::vector<long long>(conj.a.begin(), conj.a.end()));
  }
  return out;
}

std::vector<FpMatrix> standard_symplectic_generators(const DimContext& ctx) {
  return embed_extension_field_symplectic(ctx.n(), 1, ctx).generators;
}

}  // namespace phasepoint
