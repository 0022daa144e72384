#pragma once

#include <iosfwd>

namespace palper::acceptance {

struct Options {
  // quick trims the exhaustive ranges so the whole suite finishes in
  // seconds; the default runs the full ranges.
  bool quick = false;
  // deep additionally runs the long binary search with threshold 29.
  bool deep = false;
};

// Runs the verification suite, printing one PASS/FAIL line per criterion.
// Returns true iff everything passed.
bool run(const Options& options, std::ostream& out);

}  // namespace palper::acceptance
