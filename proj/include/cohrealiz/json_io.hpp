// JSON encodings of tokens, terms and stacks.
//
//   token  [[index, token], ...]  sorted canonically, e.g. nu_2 = [[2,[]]]
//   term   {"finite":[token,...]} | {"named":"cc"|"id"|"top"|"bot"|{"num":n}|{"barI":[i,...]}}
//          | {"apply":[term,term]}
//   stack  {"seq":{"items":[term,...],"tail":"empty"|"top"}} | {"ideal":[token,...]}

#ifndef COHREALIZ_JSON_IO_HPP
#define COHREALIZ_JSON_IO_HPP

#include <json.hpp>

#include "cohrealiz/term.hpp"

namespace coh {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json token_to_json(const Context& ctx, Token t);
Token token_from_json(Context& ctx, const json& j);

json term_to_json(Context& ctx, const Term& t);
Term term_from_json(Eval& ev, const json& j);

json stack_to_json(Context& ctx, const Stack& s);
Stack stack_from_json(Eval& ev, const json& j);

/// canonical single-line text of a token
std::string token_text(const Context& ctx, Token t);

}  // namespace coh

#endif  // COHREALIZ_JSON_IO_HPP
