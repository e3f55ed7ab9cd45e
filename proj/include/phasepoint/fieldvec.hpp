#pragma once

// Arithmetic over F_p: phase-space labels, symplectic matrices, matrix group
// closure and the extension-field subgroup embedding Sp(2m, p^k) -> Sp(2mk, p).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace phasepoint {

class DimContext {
 public:
  // Throws OutOfRange unless p is prime, n >= 1 and p^n <= 2^20.
  DimContext(int p, int n);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  int two_n() const noexcept { return 2 * n_; }

  int reduce(long long v) const noexcept {
    const long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const DimContext&, const DimContext&) = default;

 private:
  int p_;
  int n_;
  int q_;
};

// (p, n) with p^n = d; throws OutOfRange when d is not a prime power.
DimContext context_for_dimension(int d);

// Throws ContextMismatch when the two contexts differ.
void require_same_context(const DimContext& a, const DimContext& b);

/// Phase-space label in F_p^{2n}. Entries 0..n-1 are X exponents, n..2n-1 are
/// Z exponents.
class FpVector {
 public:
  FpVector(const DimContext& ctx, std::span<const long long> entries);
  FpVector(const DimContext& ctx, std::initializer_list<long long> entries);
  static FpVector zero(const DimContext& ctx);
  static FpVector unit(const DimContext& ctx, int k);
  // Inverse of index(): digits in base p, entry 0 most significant.
  static FpVector from_index(const DimContext& ctx, std::size_t index);

  const DimContext& ctx() const noexcept { return ctx_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  std::size_t index() const noexcept;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector operator-() const;
  FpVector scaled(long long s) const;

  friend bool operator==(const FpVector&, const FpVector&) = default;

 private:
  FpVector(const DimContext& ctx, std::vector<int> reduced);

  DimContext ctx_;
  std::vector<int> entries_;
};

std::string to_string(const FpVector& v);

/// Square 2n x 2n matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix(const DimContext& ctx, std::span<const long long> row_major);
  FpMatrix(const DimContext& ctx, std::initializer_list<long long> row_major);
  static FpMatrix identity(const DimContext& ctx);
  static FpMatrix scalar(const DimContext& ctx, long long s);
  // Column k is the image of the k-th unit vector.
  static FpMatrix from_columns(const DimContext& ctx, std::span<const FpVector> columns);

  const DimContext& ctx() const noexcept { return ctx_; }
  int size() const noexcept { return ctx_.two_n(); }
  int operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * size() + c)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpVector operator*(const FpVector& v) const;
  FpVector column(int k) const;
  FpMatrix transpose() const;

  bool is_identity() const noexcept;
  // Multiplicative order; throws OutOfRange if singular or beyond `limit`.
  std::uint64_t order(std::uint64_t limit = 1u << 20) const;
  // Row-major residues joined by ','; the dedup key for group closure.
  std::string key() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  FpMatrix(const DimContext& ctx, std::vector<int> reduced);

  DimContext ctx_;
  std::vector<int> entries_;
};

std::string to_string(const FpMatrix& m);

// Dense square matrix over F_p of arbitrary size; used for small linear
// algebra (inverses, change of basis) that is not tied to a DimContext.
struct ModpMatrix {
  int p = 2;
  int rows = 0;
  std::vector<int> a;  // row-major, rows x rows

  int& at(int r, int c) { return a[static_cast<std::size_t>(r * rows + c)]; }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r * rows + c)]; }
};

ModpMatrix modp_multiply(const ModpMatrix& x, const ModpMatrix& y);
// Throws OutOfRange if singular.
ModpMatrix modp_inverse(const ModpMatrix& m);
long long modp_inverse(long long a, int p);

/// Standard symplectic form [u, v] = sum_j (u_j v_{n+j} - u_{n+j} v_j) mod p.
int symplectic_form(const FpVector& u, const FpVector& v);

bool is_symplectic(const FpMatrix& m);

// |Sp(2n, p)| = p^{n^2} prod_{i=1..n} (p^{2i} - 1); OutOfRange on overflow.
std::uint64_t symplectic_group_order(int n, int p);

inline constexpr std::size_t kDefaultGroupCap = std::size_t{1} << 20;

/// Breadth-first closure of `gens` under multiplication, identity first,
/// then discovery order. Throws GroupTooLarge past `cap` elements.
std::vector<FpMatrix> generate_matrix_group(std::span<const FpMatrix> gens,
                                            std::size_t cap = kDefaultGroupCap);

// Orbit BFS of (1, 0, ..., 0); works for generators or a closed group.
bool is_transitive_on_nonzero(std::span<const FpMatrix> group_or_gens);

enum class GroupForm { Generators, Closed };

/// Whether -1 lies in the group. With GroupForm::Generators the list is
/// closed first. Throws NotDefinedForEvenPrime for p = 2.
bool contains_central_involution(std::span<const FpMatrix> group_or_gens,
                                 GroupForm form = GroupForm::Generators,
                                 std::size_t cap = kDefaultGroupCap);

// F, S, CZ style generators: per-coordinate Fourier (x_j -> z_j, z_j -> -x_j),
// shear x_j -> x_j + z_j, and x_j -> x_j + z_{j+1}, x_{j+1} -> x_{j+1} + z_j.
std::vector<FpMatrix> standard_symplectic_generators(const DimContext& ctx);

// Monic irreducible polynomial of degree k over F_p, coefficients low to high
// (size k + 1). Lexicographic search on (c_{k-1}, ..., c_0); first hit wins.
std::vector<int> first_irreducible_polynomial(int p, int k);
bool is_irreducible(std::span<const int> monic, int p);

struct ExtensionEmbedding {
  int m = 0;
  int k = 0;
  std::vector<int> polynomial;       // defining polynomial of F_{p^k}
  ModpMatrix change_of_basis;        // P with P^T J_trace P = J_standard
  std::vector<FpMatrix> generators;  // P^{-1} G P for each generator G
};

/// Generators of Sp(2m, p^k) realized inside Sp(2mk, p): each F_{p^k} entry
/// becomes its k x k regular-representation block (X block then Z block),
/// the trace form is conjugated back to the standard form.
ExtensionEmbedding embed_extension_field_symplectic(int m, int k, const DimContext& ctx);

}  // namespace phasepoint
