#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bfg {

namespace detail {
inline std::string with_line(std::string msg, int line) {
  if (line > 0) msg += " (line " + std::to_string(line) + ")";
  return msg;
}
}  // namespace detail

/// Base class for everything the library throws. `line()` is nonzero when
/// the error was raised while reading a graph file.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg, int line = 0)
      : std::runtime_error(detail::with_line(msg, line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

struct range_error : error {
  using error::error;
};

struct precision_error : error {
  using error::error;
};

struct syntax_error : error {
  using error::error;
};

struct duplicate_vertex : error {
  std::string id;
  explicit duplicate_vertex(std::string v, int line = 0)
      : error("duplicate vertex '" + v + "'", line), id(std::move(v)) {}
};

struct duplicate_edge : error {
  std::string a, b;
  duplicate_edge(std::string x, std::string y, int line = 0)
      : error("duplicate edge '" + x + " " + y + "'", line),
        a(std::move(x)),
        b(std::move(y)) {}
};

struct unknown_endpoint : error {
  std::string id;
  explicit unknown_endpoint(std::string v, int line = 0)
      : error("edge endpoint '" + v + "' is not a vertex", line),
        id(std::move(v)) {}
};

struct self_loop : error {
  std::string id;
  explicit self_loop(std::string v, int line = 0)
      : error("self loop at '" + v + "'", line), id(std::move(v)) {}
};

enum class domination_side { positive, negative };

struct domination_violation : error {
  std::string a, b;
  domination_side side;
  domination_violation(std::string x, std::string y, domination_side s,
                       int line = 0)
      : error("edge '" + x + " " + y + "' " +
                  (s == domination_side::positive
                       ? "positive membership exceeds the endpoint minimum"
                       : "negative membership is below the endpoint maximum"),
              line),
        a(std::move(x)),
        b(std::move(y)),
        side(s) {}
};

struct unknown_vertex : error {
  std::string id;
  explicit unknown_vertex(std::string v)
      : error("unknown vertex '" + v + "'"), id(std::move(v)) {}
};

struct empty_graph : error {
  empty_graph() : error("graph has no vertices") {}
};

struct unknown_theorem : error {
  std::string id;
  explicit unknown_theorem(std::string t)
      : error("unknown theorem '" + t + "'"), id(std::move(t)) {}
};

struct invalid_grid : error {
  using error::error;
};

struct invalid_spec : error {
  using error::error;
};

struct infeasible_grid : error {
  using error::error;
};

}  // namespace bfg
