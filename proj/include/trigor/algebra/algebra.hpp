#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trigor/linalg/matrix.hpp"

namespace trigor::algebra {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;

struct Arrow {
  int source = 0;
  int target = 0;
  std::string label;
};

// A path given by its arrows in traversal order: word {a1, a2} means a1 first, then a2.
// Its product in the algebra is a2 * a1.
struct BasisElement {
  int source = 0;
  int target = 0;
  std::vector<int> word;
};

struct Term {
  int index = 0;
  Scalar coeff;
};
// Sparse linear combination of basis elements, sorted by index, no zero coefficients.
using Element = std::vector<Term>;

struct PathTerm {
  std::vector<int> word;
  Scalar coeff;
};
using Relation = std::vector<PathTerm>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  // kQ/I for an admissible ideal I generated by the relations.
  static AlgebraPtr from_quiver(Field f, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                std::vector<Relation> relations, std::string name = "");

  // Basic algebra given by structure constants on a basis adapted to the vertex idempotents:
  // idempotents[v] is the index of e_v, every other basis element lies in some e_w A e_v and in the radical.
  // Arrows and path words are recovered from the multiplication; `labels` names basis elements.
  struct Structure {
    Field field;
    std::vector<std::string> vertices;
    std::vector<int> source, target;
    std::vector<std::string> labels;
    std::vector<int> idempotents;
    // product[i * n + j] = b_i * b_j
    std::vector<Element> product;
  };
  struct Presented {
    AlgebraPtr algebra;
    // Column k holds the coordinates of old basis element k in the new basis.
    Matrix old_to_new;
    Matrix new_to_old;
  };
  static Presented from_structure(const Structure& s, std::string name = "");

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Relation>& relations() const { return relations_; }

  // b_i * b_j
  const Element& product(int i, int j) const { return product_[static_cast<std::size_t>(i) * basis_.size() + j]; }
  int idempotent(int v) const { return idempotent_[v]; }
  int arrow_element(int a) const { return arrow_element_[a]; }
  bool is_idempotent_index(int i) const { return basis_[i].word.empty(); }

  // Path (traversal order) reduced to the basis; zero if it exits the algebra.
  Element reduce_word(const std::vector<int>& word) const;
  Element multiply(const Element& x, const Element& y) const;
  std::string element_to_string(const Element& e) const;
  std::string basis_label(int i) const;

  AlgebraPtr opposite() const;
  std::uint64_t fingerprint() const { return fingerprint_; }
  bool same_as(const Algebra& o) const;

  // Associativity on basis triples, idempotent axioms, compatibility of words with products.
  void validate() const;

 private:
  Algebra() = default;
  void finish();

  std::string name_;
  Field field_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  std::vector<BasisElement> basis_;
  std::vector<Element> product_;
  std::vector<int> idempotent_;
  std::vector<int> arrow_element_;
  std::uint64_t fingerprint_ = 0;
  mutable std::weak_ptr<const Algebra> opposite_;
  mutable std::shared_ptr<const Algebra> opposite_strong_;
};

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* where);

// Convenience constructors for the algebras used throughout.
AlgebraPtr path_algebra_An(Field f, int n, std::string name = "");
AlgebraPtr dual_numbers(Field f, std::string name = "");   // k[x]/(x^2)
AlgebraPtr semisimple(Field f, int n, std::string name = "");

Element make_element(Field f, std::vector<std::pair<int, long long>> terms);
Element scale(const Element& e, const Scalar& s);
Element add(const Element& a, const Element& b);

}  // namespace trigor::algebra
