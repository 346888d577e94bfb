#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vg3d {

// Canonical operation names of the visual-program DSL. Synonyms are folded
// at parse time (NEXT_TO/CLOSE -> NEAR, UNDER -> BELOW, TOP -> ON,
// BACK -> BEHIND, FACING/LOOKING -> FRONT, ACROSS -> BETWEEN).
enum class Op {
  Loc,
  // view-independent
  Closest,
  Farthest,
  Near,
  Far,
  Above,
  Below,
  On,
  Middle,
  Higher,
  Lower,
  // view-dependent
  Left,
  Right,
  Leftmost,
  Rightmost,
  Front,
  Behind,
  Between,
  // functional
  Min,
  Max,
};

enum class BoxProperty { Size, Length, Width, Height };

const char* op_name(Op op);
const char* property_name(BoxProperty p);

struct Arg {
  enum class Kind { String, Var, Number, Property };

  Kind kind = Kind::Var;
  std::string text;  // string literal body or canonical (uppercase) var name
  double number = 0.0;
  BoxProperty property = BoxProperty::Size;

  static Arg string(std::string s);
  static Arg var(std::string name);
  static Arg num(double value);
  static Arg prop(BoxProperty p);

  bool operator==(const Arg& o) const;
};

struct Statement {
  std::string output_var;  // canonical uppercase
  Op op = Op::Loc;
  std::vector<Arg> args;
  // Name as written when it was a best-effort synonym (FACING, LOOKING,
  // ACROSS); empty for canonical names and exact synonyms.
  std::string loose_synonym;
  int line = 0;  // 1-based source line, 0 for synthesized statements

  bool operator==(const Statement& o) const {
    return output_var == o.output_var && op == o.op && args == o.args;
  }
};

// A straight-line, single-assignment program. The grounding result is the
// value of TARGET when assigned, otherwise the value of the last statement.
struct Program {
  std::vector<Statement> statements;

  bool operator==(const Program& o) const { return statements == o.statements; }
};

// Parses program text against the grammar
//   program   := statement (NEWLINE statement)* ;
//   statement := IDENT "=" OPNAME "(" [arg ("," arg)*] ")" ;
//   arg       := STRING | IDENT | NUMBER ;
// Op names are case-insensitive; identifiers are canonicalized to uppercase;
// blank lines are ignored. Throws ParseError (with line/column) on lexical
// errors, unknown ops, arity/kind mismatches, use of undefined variables,
// and variable reassignment. OPPOSITE is rejected as an unsupported relation.
Program parse(const std::string& text);

// Canonical rendering: one statement per line, single spaces, single-quoted
// strings, uppercase ops. parse(pretty(p)) == p for all valid programs.
std::string pretty(const Program& program);
std::string pretty(const Statement& statement);
std::string pretty(const Arg& arg);

// Scans raw LLM output line by line, keeps the longest contiguous run of
// lines shaped like statements (first run wins ties), and parses that run.
// Throws ParseError when no parsable run exists (program-generation failure).
Program extract_program(const std::string& raw_llm_text);

// Signature metadata used by the parser; exposed for the executor and tests.
struct OpSignature {
  int min_args;
  int max_args;
  // One kind per possible position; Kind::Var positions accept only variable
  // references, Kind::Number only numeric literals, etc.
  std::vector<Arg::Kind> kinds;
};
const OpSignature& op_signature(Op op);

}  // namespace vg3d
