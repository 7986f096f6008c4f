#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mhopf/pipeline.hpp"

namespace mhopf {

using Token = std::string;

// Requested a global axiom verdict on an infinite group; only window-scoped
// statements are available there.
class InfiniteGroupVerdictRefused : public Error {
 public:
  explicit InfiniteGroupVerdictRefused(const std::string& what) : Error(what) {}
};

// A countable discrete group behind callbacks.  Tokens are canonical strings
// (e.g. "-3" for integers, "1,-5" for pairs, "0".."n-1" for Cayley tables).
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::string name() const = 0;
  virtual bool is_finite() const = 0;
  virtual Token identity() const = 0;
  virtual Token multiply(const Token& a, const Token& b) const = 0;
  virtual Token invert(const Token& a) const = 0;
  virtual bool valid_token(const Token& a) const = 0;

  // Window of certification: contains the identity and is closed under
  // inverse.  Finite groups return all elements regardless of the radius.
  virtual std::vector<Token> window(Index radius) const = 0;
  virtual bool on_boundary(const Token& a, Index radius) const = 0;

  // All elements; throws InfiniteGroupVerdictRefused for infinite groups.
  std::vector<Token> elements() const;
};

using OracleRef = std::shared_ptr<const GroupOracle>;

// "z", "z^d", "cyclic:n" or "cayley:<path to JSON table>".
OracleRef parse_group_spec(const std::string& spec);
OracleRef make_cayley_group(const std::string& json_text, const std::string& name);
OracleRef make_product_group(OracleRef left, OracleRef right);  // tokens "s|t"

// Finitely supported functions on the group, and on pairs.
using FinSuppFunction = std::map<Token, Rational>;
using FinSuppTensor = std::map<std::pair<Token, Token>, Rational>;

// Closed forms of the canonical maps for the pointwise function algebra with
// the convolution-dual coproduct D(f)(s, t) = f(st):
//   T1 (x) d_m (x) d_n -> d_{m n^-1} (x) d_n      T1^{-1}: d_a (x) d_b -> d_{ab} (x) d_b
//   T2, T4: d_c (x) d_a -> d_c (x) d_{c^-1 a}     inverses: d_c (x) d_x -> d_c (x) d_{cx}
FinSuppTensor kg_t1(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t1_inverse(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t2(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t2_inverse(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t3(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t3_inverse(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t4(const GroupOracle& g, const FinSuppTensor& t);
FinSuppTensor kg_t4_inverse(const GroupOracle& g, const FinSuppTensor& t);

// Counit and antipode on window points, computed through the generic scalar
// extraction and membership routes, then checked against the closed forms
// eps(d_n) = [n = e] and S(d_n) = d_{n^-1}.  Throws DerivationError on any
// disagreement.
struct KgDerivation {
  std::map<Token, Rational> epsilon;
  std::map<Token, Token> antipode;
};
KgDerivation kg_derive(const GroupOracle& g, Index radius);

// A multiplier of the function algebra given by its values.
struct OracleMultiplier {
  std::string label;
  std::function<Rational(const Token&)> value;
};

// Decides, within the window, whether the multiplier restricts to a finitely
// supported element: any nonzero value on the window boundary means the
// support keeps going and the verdict stays window-scoped.
struct WindowMembership {
  bool member_within_window = false;
  FinSuppFunction window_restriction;
  std::vector<Token> boundary_support;
};
WindowMembership kg_membership(const GroupOracle& g, const OracleMultiplier& m, Index radius);

// Group algebra Q[G] with the group-like coproduct, fed to the main
// pipeline.  Finite groups only.
Instance group_algebra_instance(const OracleRef& g, Index max_dim = 32);
// Pointwise function algebra F(G) with the convolution-dual coproduct.
Instance function_algebra_instance(const OracleRef& g, Index max_dim = 32);

// Window-scoped verification suite for K(G): round-trips of the four maps
// and their inverses on random supported tensors, generic-versus-closed-form
// derivation, and membership demonstrations.
CheckReport run_kg_window_suite(const OracleRef& g, Index radius, std::uint64_t seed,
                                Index roundtrip_samples);

}  // namespace mhopf
