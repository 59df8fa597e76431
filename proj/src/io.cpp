#include "rankforge/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rankforge/errors.hpp"

namespace rankforge {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::vector<std::string>* warnings) : in_(in), warnings_(warnings) {}

  // Next non-empty line split on whitespace; throws at end of input.
  std::vector<std::string> next(const char* expecting) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return tokens;
    }
    throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + expecting);
  }

  std::int64_t integer(const std::string& tok) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("not an integer: '" + tok + "'");
    return v;
  }

  std::size_t count(const std::string& tok) const {
    const std::int64_t v = integer(tok);
    if (v < 0) fail("expected a non-negative count, got " + tok);
    return static_cast<std::size_t>(v);
  }

  // "<keyword> <int>..." with exactly `arity` integers.
  std::vector<std::string> keyword(const char* kw, std::size_t arity) {
    auto tokens = next(kw);
    if (tokens[0] != kw || tokens.size() != arity + 1) {
      fail(std::string("expected '") + kw + "' followed by " + std::to_string(arity) + " integer(s)");
    }
    return tokens;
  }

  Matrix block(const FieldModulus& mod, std::size_t expected_index, std::size_t rows, std::size_t cols) {
    auto head = keyword("matrix", 1);
    if (count(head[1]) != expected_index) {
      fail("expected matrix " + std::to_string(expected_index) + ", got matrix " + head[1]);
    }
    Matrix m(mod, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      auto tokens = next("a matrix row");
      if (tokens.size() != cols) {
        fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(tokens.size()));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        const std::int64_t v = integer(tokens[c]);
        if (v < 0 || v >= static_cast<std::int64_t>(mod.value())) {
          if (warnings_) {
            warnings_->push_back("line " + std::to_string(line_) + ": entry " + tokens[c] + " reduced mod " +
                                 std::to_string(mod.value()));
          }
        }
        m.set(r, c, v);
      }
    }
    return m;
  }

  FieldModulus field() {
    auto tokens = keyword("field", 1);
    const std::int64_t p = integer(tokens[1]);
    if (p < 2 || p >= static_cast<std::int64_t>(FieldModulus::kMaxExclusive) ||
        !is_prime(static_cast<std::uint32_t>(p))) {
      fail("field size must be a prime below 2^31, got " + tokens[1]);
    }
    return FieldModulus(static_cast<std::uint32_t>(p));
  }

  void expect_end() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") != std::string::npos) fail("unexpected trailing content");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

 private:
  std::istream& in_;
  std::vector<std::string>* warnings_;
  std::size_t line_ = 0;
};

void write_block(std::ostream& out, std::size_t index, const Matrix& m) {
  out << "matrix " << index << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

template <typename Fn>
auto with_file(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return fn(in);
}

}  // namespace

Pencil read_pencil(std::istream& in, std::vector<std::string>* warnings) {
  LineReader rd(in, warnings);
  auto head = rd.next("'pencil'");
  if (head.size() != 1 || head[0] != "pencil") rd.fail("expected header 'pencil'");
  const FieldModulus mod = rd.field();
  auto dims = rd.keyword("dims", 2);
  const std::size_t rows = rd.count(dims[1]);
  const std::size_t cols = rd.count(dims[2]);
  const std::size_t vars = rd.count(rd.keyword("vars", 1)[1]);
  std::vector<Matrix> coeffs;
  for (std::size_t i = 0; i <= vars; ++i) coeffs.push_back(rd.block(mod, i, rows, cols));
  rd.expect_end();
  return Pencil(std::move(coeffs));
}

SModule read_module(std::istream& in, std::vector<std::string>* warnings) {
  LineReader rd(in, warnings);
  auto head = rd.next("'module'");
  if (head.size() != 1 || head[0] != "module") rd.fail("expected header 'module'");
  const FieldModulus mod = rd.field();
  const std::size_t n = rd.count(rd.keyword("dim", 1)[1]);
  const std::size_t k = rd.count(rd.keyword("gens", 1)[1]);
  std::vector<Matrix> actions;
  for (std::size_t i = 1; i <= k; ++i) actions.push_back(rd.block(mod, i, n, n));
  rd.expect_end();
  return SModule(mod, n, std::move(actions));
}

void write_pencil(std::ostream& out, const Pencil& pencil) {
  out << "pencil\nfield " << pencil.modulus().value() << "\ndims " << pencil.rows() << ' ' << pencil.cols()
      << "\nvars " << pencil.num_vars() << '\n';
  for (std::size_t i = 0; i <= pencil.num_vars(); ++i) write_block(out, i, pencil.coefficient(i));
}

void write_module(std::ostream& out, const SModule& m) {
  out << "module\nfield " << m.modulus().value() << "\ndim " << m.dim() << "\ngens " << m.num_actions() << '\n';
  for (std::size_t i = 0; i < m.num_actions(); ++i) write_block(out, i + 1, m.actions()[i]);
}

Pencil load_pencil(const std::string& path, std::vector<std::string>* warnings) {
  return with_file(path, [&](std::istream& in) { return read_pencil(in, warnings); });
}

SModule load_module(const std::string& path, std::vector<std::string>* warnings) {
  return with_file(path, [&](std::istream& in) { return read_module(in, warnings); });
}

Vector parse_vector(const std::string& text, const FieldModulus& mod) {
  Vector v;
  if (text.empty()) return v;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(0, "malformed vector entry '" + tok + "' in '" + text + "'");
    }
    v.push_back(mod.reduce(x));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string format_vector(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace rankforge
