#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cheb/exact.hpp"
#include "cheb/groups.hpp"
#include "cheb/primes.hpp"

namespace cheb {

/// Integer polynomial, constant term first.
struct IntegerPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
};

BigInt poly_discriminant(const IntegerPolynomial& f);

/// Factorization types that occur for the group, each with the classes
/// whose elements act with that cycle type.
struct TypeBlock {
  CycleType type;
  int order = 1;
  std::vector<std::size_t> classes;
};

/// A Galois extension K/Q given by a defining polynomial of a subfield k
/// whose Galois closure is K.
class FieldDescriptor {
 public:
  FieldDescriptor(std::string name, IntegerPolynomial poly, std::shared_ptr<const FiniteGroup> group,
                  BigInt disc_field, bool strong_artin = false);

  const std::string& name() const noexcept { return name_; }
  const IntegerPolynomial& poly() const noexcept { return poly_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const BigInt& disc_field() const noexcept { return disc_; }
  const BigInt& poly_disc() const noexcept { return poly_disc_; }
  bool strong_artin() const noexcept { return strong_artin_; }

  std::size_t degree_closure() const noexcept { return group_->order(); }
  int m() const noexcept { return static_cast<int>(group_->order()) - 1; }
  /// log|D_K|, usable when D_K does not fit in a double.
  double log_abs_disc() const noexcept { return log_abs_disc_; }
  bool divides_disc(std::uint64_t p) const { return mod_small(disc_, p) == 0; }
  bool regular_action() const noexcept { return regular_; }

  const CycleType& class_type(std::size_t class_index) const { return class_types_[class_index]; }
  const std::vector<TypeBlock>& type_blocks() const noexcept { return blocks_; }
  /// Index into type_blocks(), or -1 if no element has this cycle type.
  int block_of_type(const CycleType& type) const;
  int block_of_class(std::size_t class_index) const { return class_block_[class_index]; }

 private:
  std::string name_;
  IntegerPolynomial poly_;
  std::shared_ptr<const FiniteGroup> group_;
  BigInt disc_;
  BigInt poly_disc_;
  bool strong_artin_ = false;
  bool regular_ = false;
  double log_abs_disc_ = 0;
  std::vector<CycleType> class_types_;
  std::vector<TypeBlock> blocks_;
  std::vector<int> class_block_;
};

FieldDescriptor make_field(const std::string& name, const std::vector<std::int64_t>& coeffs,
                           const std::string& group_label, const BigInt& disc, bool strong_artin = false);

struct FrobeniusData {
  std::uint64_t p = 0;
  bool ramified = false;
  CycleType factorization_type;
  int frobenius_order = 0;
  int block = -1;                          // index into type_blocks()
  std::optional<std::size_t> class_index;  // set when the type pins down the class
};

FrobeniusData frobenius_data(const FieldDescriptor& field, std::uint64_t p);

/// Frobenius type blocks for every prime up to x, computed once.
class SplittingTable {
 public:
  static constexpr std::int16_t kRamified = -1;

  SplittingTable(const FieldDescriptor& field, const PrimeSieve& sieve, double x, unsigned threads = 1);

  double x() const noexcept { return x_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::uint32_t prime(std::size_t i) const { return (*primes_)[i]; }
  /// Type block index, or kRamified.
  std::int16_t block(std::size_t i) const { return blocks_[i]; }
  bool ramified(std::size_t i) const { return blocks_[i] == kRamified; }

 private:
  const std::vector<std::uint32_t>* primes_;
  double x_;
  std::vector<std::int16_t> blocks_;
};

struct Catalog {
  std::vector<FieldDescriptor> fields;

  const FieldDescriptor& find(const std::string& name) const;
};

/// Records `name | coefficients (constant first) | group | discriminant
/// [| strong_artin]`, with `#` comments. Errors name the offending line.
Catalog parse_catalog(std::istream& in, const std::string& source = "<catalog>");
Catalog load_catalog(const std::string& path);

}  // namespace cheb
