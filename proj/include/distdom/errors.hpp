#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace distdom {

/// Base for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class not_bipartite_error : public error {
 public:
  explicit not_bipartite_error(std::size_t vertex)
      : error("graph is not bipartite: vertex " + std::to_string(vertex) +
              " lies on an odd cycle"),
        vertex_(vertex) {}

  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

class disconnected_error : public error {
 public:
  disconnected_error() : error("graph is not connected") {}
};

class precondition_error : public error {
 public:
  using error::error;
};

/// The exact search ran out of nodes. Carries the bracket known so far.
class budget_exhausted_error : public error {
 public:
  budget_exhausted_error(std::size_t lower, std::size_t upper, std::uint64_t nodes)
      : error("search budget exhausted after " + std::to_string(nodes) +
              " nodes; gamma in [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper),
        nodes_(nodes) {}

  std::size_t lower_bound() const noexcept { return lower_; }
  std::size_t upper_bound() const noexcept { return upper_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
  std::uint64_t nodes_;
};

class degenerate_profile_error : public error {
 public:
  using error::error;
};

class singular_system_error : public error {
 public:
  using error::error;
};

/// A closed form was requested for a profile outside its hypotheses.
class inapplicable_error : public error {
 public:
  using error::error;
};

}  // namespace distdom
