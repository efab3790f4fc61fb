// Bounded first-order arithmetic: sentences, their truth, their
// interpretation as props and the realizers built by structural recursion.

#ifndef COHREALIZ_ARITH_HPP
#define COHREALIZ_ARITH_HPP

#include <memory>
#include <string>
#include <vector>

#include "cohrealiz/prop.hpp"

namespace coh {

struct Expr {
  enum class Kind { Var, Const, Add, Mul } kind = Kind::Const;
  std::string name;
  std::uint64_t value = 0;
  std::shared_ptr<const Expr> l, r;
};

struct Quantifier {
  bool universal = true;
  std::string var;
  std::uint32_t bound = 0;  // ranges over 0..bound
};

/// Q1 x1<=N1. ... Qk xk<=Nk. lhs = rhs
struct Sentence {
  std::vector<Quantifier> prefix;
  std::shared_ptr<const Expr> lhs, rhs;
  std::string text;
};

class ArithParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FalseSentence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "forall x<=2. exists y<=3. x+y = y*1"; quantified variables must be
/// distinct and the matrix closed under the prefix.
Sentence parse_sentence(const std::string& text);
bool truth(const Sentence& s);

/// The sentence read in the tripos: equations as N_K equality, forall as
/// the intersection over n of [[n ~ n]] -> A(n), exists through a finite
/// family of test props X as the intersection of (forall n. N(n) -> A(n) -> X) -> X.
Prop sentence_prop(Eval& ev, const Sentence& s);

struct ArithResult {
  Term realizer;
  Verdict verdict;
  ProoflikeResult prooflike;
};

/// Builds the realizer of a true sentence and checks it; throws
/// FalseSentence without building anything otherwise.
ArithResult arith_realize(Eval& ev, const Sentence& s);

struct ArithFixture {
  std::string text;
  bool true_sentence;
};
const std::vector<ArithFixture>& arith_fixtures();

}  // namespace coh

#endif  // COHREALIZ_ARITH_HPP
