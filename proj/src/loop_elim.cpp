#include "mutdiff/loop_elim.hpp"

#include <set>
#include <stdexcept>

#include "mutdiff/errors.hpp"
#include "mutdiff/parser.hpp"

namespace mutdiff {

namespace {

class Eliminator {
 public:
  explicit Eliminator(int nd) : nd_(nd) {}

  std::vector<StmtPtr> transform_block(const std::vector<StmtPtr>& body) {
    std::vector<StmtPtr> out;
    out.reserve(body.size());
    for (const auto& s : body) out.push_back(transform(s));
    return out;
  }

  const std::vector<std::pair<std::string, SourceLoc>>& flags() const { return flags_; }

 private:
  StmtPtr transform(const StmtPtr& s) {
    if (const auto* f = std::get_if<If>(&s->node))
      return make_if(f->cond, transform_block(f->then_body), transform_block(f->else_body),
                     s->loc);
    if (const auto* w = std::get_if<While>(&s->node)) {
      std::string flag = "loop_" + std::to_string(s->loc.line);
      if (!flag_names_.insert(flag).second)
        throw PreconditionViolation("two loops share source line " +
                                    std::to_string(s->loc.line) +
                                    "; flag names would collide");
      flags_.emplace_back(flag, s->loc);
      std::vector<StmtPtr> body = transform_block(w->body);
      // U(0): the condition still holds after nd unrolled iterations.
      StmtPtr expansion =
          make_if(w->cond, {make_assign(flag, make_bool(true, s->loc), s->loc)}, {}, s->loc);
      for (int k = 1; k <= nd_; ++k) {
        std::vector<StmtPtr> level = body;
        level.push_back(expansion);
        expansion = make_if(w->cond, std::move(level), {}, s->loc);
      }
      return expansion;
    }
    return s;  // Assign / Decl
  }

  int nd_;
  std::vector<std::pair<std::string, SourceLoc>> flags_;
  std::set<std::string> flag_names_;
};

void assert_loop_free(const std::vector<StmtPtr>& body) {
  for (const auto& s : body) {
    if (std::holds_alternative<While>(s->node))
      throw std::logic_error("loop elimination left a while statement");
    if (const auto* f = std::get_if<If>(&s->node)) {
      assert_loop_free(f->then_body);
      assert_loop_free(f->else_body);
    }
  }
}

}  // namespace

LoopFreeProgram eliminate_loops(const Program& p, int nd) {
  if (nd < 1) throw PreconditionViolation("nesting depth must be >= 1");
  Eliminator elim(nd);
  std::vector<StmtPtr> body = elim.transform_block(p.body);

  LoopFreeProgram out;
  out.nd = nd;
  out.program.name = p.name;
  out.program.inputs = p.inputs;
  out.program.outputs = p.outputs;
  for (const auto& [flag, loc] : elim.flags()) {
    out.program.body.push_back(make_decl(flag, Ty::Bool, make_bool(false, loc), loc));
    out.loop_flags.push_back(flag);
  }
  for (auto& s : body) out.program.body.push_back(std::move(s));

  assert_loop_free(out.program.body);
  // Also re-runs definite assignment, which now checks that every output is
  // assigned on every path of the expanded program.
  check_program(out.program);
  return out;
}

std::vector<std::string> flag_variables(const LoopFreeProgram& lfp) { return lfp.loop_flags; }

}  // namespace mutdiff
