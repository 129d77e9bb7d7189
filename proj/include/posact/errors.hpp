#ifndef POSACT_ERRORS_HPP_
#define POSACT_ERRORS_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace posact {

// Raised by validators; `code` is the axiom name, `args` the witness indices,
// e.g. NotAssociative(1,2,2).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, std::vector<int> args)
      : std::runtime_error(format(code, args)),
        code_(std::move(code)),
        args_(std::move(args)) {}

  std::string const&      code() const noexcept { return code_; }
  std::vector<int> const& args() const noexcept { return args_; }

 private:
  static std::string format(std::string const& code,
                            std::vector<int> const& args) {
    std::ostringstream os;
    os << code << "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i != 0) {
        os << ",";
      }
      os << args[i];
    }
    os << ")";
    return os.str();
  }

  std::string      code_;
  std::vector<int> args_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(long long budget)
      : std::runtime_error("BudgetExceeded(" + std::to_string(budget) + ")") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& file, int line, std::string const& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

}  // namespace posact
#endif  // POSACT_ERRORS_HPP_
