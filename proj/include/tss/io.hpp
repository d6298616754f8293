#pragma once

// Line-oriented text formats.  All vertex / element / subset ids are 1-based
// in files and 0-based in memory; this module owns the conversion.
//
// Instance format:     p tss <n> <m>
//                      t <v> <threshold>        one per vertex
//                      e <u> <v>                one per edge
//                      b 1 <v...> / b 2 <v...>  optional bipartition block
// Set cover format:    p sc <n> <m>
//                      s <e1> <e2> ...          one line per subset, in order
// Result format:       s <size>
//                      w <v1> <v2> ...          witness, ascending
//                      i <key> <value>          counters, alphabetical
// Trace format:        r <round> <v1> <v2> ...  one line per round
//
// '#' starts a comment anywhere in a line; lines whose first token is 'c'
// are comments.  Parse errors carry the offending 1-based line number.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tss/instance.hpp"

namespace tss {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

TssInstance parse_tss(std::istream& in);
TssInstance parse_tss(std::string_view text);

SetCoverInstance parse_setcover(std::istream& in);
SetCoverInstance parse_setcover(std::string_view text);

SolveResult parse_result(std::istream& in);
SolveResult parse_result(std::string_view text);

std::string write_tss(const TssInstance& instance);
std::string write_setcover(const SetCoverInstance& instance);
std::string write_result(const SolveResult& result);
std::string write_trace(const ActivationTrace& trace);

}  // namespace tss
