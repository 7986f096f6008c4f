#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/multiplier.hpp"

namespace mhopf {

enum class CoproductKind { element, multiplier };

// A linear map from A into the multipliers of A (x) A, stored per basis
// element.  Element-valued coproducts are embedded so that downstream code
// has a single representation.
class Coproduct {
 public:
  static Coproduct element_valued(TensorSquare square, std::vector<Vec> tensors);
  // Actions are verified as genuine multipliers of the tensor square.
  static Coproduct multiplier_valued(TensorSquare square,
                                     std::vector<std::pair<Matrix, Matrix>> actions);

  const TensorSquare& square() const { return square_; }
  const AlgebraRef& base() const { return square_.base(); }
  Index base_dim() const { return square_.base_dim(); }
  CoproductKind kind() const { return kind_; }

  const Multiplier& value(Index i) const { return values_[i]; }
  // The (tensor-coordinate) value of an element-valued coproduct, when known.
  const std::optional<std::vector<Vec>>& element_tensors() const { return tensors_; }

  Multiplier of(const Vec& x) const;  // value on an arbitrary element

  Coproduct coopposite() const;
  // The same data viewed over opposite(A): left and right actions swap and
  // the tensor square is rebuilt over the opposite base.
  Coproduct opposite_reduction() const;

 private:
  Coproduct(TensorSquare square, std::vector<Multiplier> values, CoproductKind kind,
            std::optional<std::vector<Vec>> tensors)
      : square_(std::move(square)), values_(std::move(values)), kind_(kind),
        tensors_(std::move(tensors)) {}

  TensorSquare square_;
  std::vector<Multiplier> values_;
  CoproductKind kind_;
  std::optional<std::vector<Vec>> tensors_;
};

// The four canonical maps on A (x) A:
//   T1(a (x) b) = D(a)(1 (x) b)       T2(c (x) a) = (c (x) 1) D(a)
//   T3(a (x) b) = (1 (x) b) D(a)      T4(c (x) a) = D(a)(c (x) 1)
enum class CanonicalWhich { t1 = 1, t2 = 2, t3 = 3, t4 = 4 };

struct CanonicalOperator {
  CanonicalWhich which;
  bool regular = false;
  bool bijective = false;
  // Defined only when regular: columns are images of basis tensors in
  // lexicographic order.
  std::optional<Matrix> matrix;
  std::optional<Matrix> inverse;           // defined only when bijective
  std::optional<Witness> irregularity;     // first failing basis pair
  std::optional<Vec> kernel_vector;        // nonzero kernel element when not bijective
};

// Computes images through the uniform multiplier route (product with a leg,
// then membership), never through a special case for element-valued data.
CanonicalOperator canonical_map(const Coproduct& d, CanonicalWhich which);

CheckResult check_homomorphism(const Coproduct& d);

// Coassociativity in the two covered forms.  Left form needs T1 and T4
// regular, right form needs T2 and T3 regular.
CheckResult check_coassoc_left(const Coproduct& d, const CanonicalOperator& t1,
                               const CanonicalOperator& t4);
CheckResult check_coassoc_right(const Coproduct& d, const CanonicalOperator& t2,
                                const CanonicalOperator& t3);

// T23 T12 = T12 T13 T23 for T = T1 on the triple tensor power, with
// T13 = flip23 . T12 . flip23.
CheckResult check_pentagon(const Coproduct& d, const CanonicalOperator& t1);

// The slices (i (x) w)(T1 images) span A (left leg) and the T4 analogue
// spans A on the right leg.
CheckResult check_fullness(const Coproduct& d, const CanonicalOperator& t1,
                           const CanonicalOperator& t4);

struct Classification {
  bool is_left = false;
  bool is_right = false;
  bool is_regular = false;
  std::optional<std::string> first_failure;
};

// Full axiom sweep; used by classify() and by the report pipeline.
struct AxiomRun {
  CheckResult nondegenerate, idempotent, homomorphism;
  std::array<CanonicalOperator, 4> maps;  // indexed T1..T4
  CheckResult regular[4], bijective[4];
  CheckResult coassoc_left, coassoc_right;
  CheckResult pentagon, fullness;
  Classification classification;
};

AxiomRun run_axioms(const Coproduct& d);
Classification classify(const Coproduct& d);

// Fills run.classification from the other fields; shared by run_axioms and
// by callers that assemble an AxiomRun stage by stage.
void finalize_classification(AxiomRun& run);

}  // namespace mhopf
