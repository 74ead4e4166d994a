#include "kspec/poly.hpp"

#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

namespace kspec {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

HomogeneousPoly::HomogeneousPoly(int n, TermMap terms) : n_(n) {
  if (n < 2) throw std::invalid_argument("homogeneous polynomial needs n >= 2 variables");
  bool first = true;
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector has wrong length");
    for (int a : e)
      if (a < 0) throw std::invalid_argument("negative exponent");
    c.canonicalize();
    if (c == 0) continue;
    const int deg = total_degree(e);
    if (first) {
      d_ = deg;
      first = false;
    } else if (deg != d_) {
      throw std::invalid_argument("terms of mixed total degree");
    }
    terms_.emplace(e, c);
  }
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
  if (d_ < 1) throw std::invalid_argument("degree must be at least 1");
}

HomogeneousPoly HomogeneousPoly::zero(int n, int d) {
  HomogeneousPoly p;
  p.n_ = n;
  p.d_ = d;
  return p;
}

HomogeneousPoly HomogeneousPoly::derivative(int var) const {
  HomogeneousPoly out = zero(n_, d_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent de = e;
    --de[var];
    out.terms_[de] += c * e[var];
  }
  return out;
}

std::vector<HomogeneousPoly> HomogeneousPoly::partials() const {
  std::vector<HomogeneousPoly> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(derivative(i));
  return out;
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& other) const {
  if (other.n_ != n_) throw std::invalid_argument("variable count mismatch");
  HomogeneousPoly out = zero(n_, d_ + other.d_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) {
      Exponent e(n_);
      for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      out.terms_[e] += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& other) const {
  if (other.n_ != n_ || other.d_ != d_) throw std::invalid_argument("cannot add polynomials of different shape");
  HomogeneousPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.terms_[e] += c;
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

HomogeneousPoly HomogeneousPoly::scaled(const Rational& c) const {
  HomogeneousPoly out = zero(n_, d_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Rational HomogeneousPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

HomogeneousPoly HomogeneousPoly::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& [e, c] : terms_) {
    den = lcm(den, c.get_den());
    num = gcd(num, c.get_num());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (terms_.begin()->second < 0) factor = -factor;
  return scaled(factor);
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string HomogeneousPoly::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || d_ == 0) {
      os << rational_to_string(mag);
      wrote = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars.at(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  const auto bad = [&] { return ParseError(ParseError::Kind::Syntax, "malformed rational '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  const auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < s.size() && std::isdigit(static_cast<unsigned char>(s[to]))) ++to;
    return to;
  };
  std::size_t end = digits(pos);
  if (end == pos) throw bad();
  mpz_class num(s.substr(pos, end - pos));
  mpz_class den = 1;
  if (end < s.size()) {
    if (s[end] != '/') throw bad();
    std::size_t dend = digits(end + 1);
    if (dend == end + 1 || dend != s.size()) throw bad();
    den = mpz_class(s.substr(end + 1, dend - end - 1));
    if (den == 0) throw bad();
  }
  Rational q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : vars_(vars) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  HomogeneousPoly parse() {
    const int n = static_cast<int>(vars_.size());
    if (n < 2) throw ParseError(ParseError::Kind::Syntax, "need at least two variables");
    if (s_.empty()) throw error("empty polynomial");
    TermMap terms;
    std::vector<int> degrees;
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term(n);
      if (neg) c = -c;
      degrees.push_back(std::accumulate(e.begin(), e.end(), 0));
      terms[e] += c;
    }
    for (std::size_t i = 1; i < degrees.size(); ++i)
      if (degrees[i] != degrees[0])
        throw ParseError(ParseError::Kind::NotHomogeneous,
                         "terms of degree " + std::to_string(degrees[0]) + " and " + std::to_string(degrees[i]));
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    if (terms.empty()) throw ParseError(ParseError::Kind::NotHomogeneous, "polynomial is zero");
    if (degrees[0] < 1) throw ParseError(ParseError::Kind::NotHomogeneous, "constant polynomial");
    return HomogeneousPoly(n, std::move(terms));
  }

 private:
  ParseError error(const std::string& msg) const {
    return ParseError(ParseError::Kind::Syntax, msg + " at offset " + std::to_string(pos_));
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  bool at_ident() const {
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) throw error("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  std::pair<Exponent, Rational> term(int n) {
    Exponent e(n, 0);
    Rational c = 1;
    bool need_factor = true;
    if (at_digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw error("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      need_factor = false;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        need_factor = true;
      } else {
        return {e, c};
      }
    }
    if (!need_factor) return {e, c};
    for (;;) {
      factor(e);
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-') throw error("unexpected character");
    return {e, c};
  }

  void factor(Exponent& e) {
    if (!at_ident()) throw error("expected variable");
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    int idx = -1;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) idx = static_cast<int>(i);
    if (idx < 0) throw ParseError(ParseError::Kind::UnknownVariable, "unknown variable '" + name + "'");
    int power = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      mpz_class k = integer();
      if (!k.fits_sint_p() || k > 1000) throw error("exponent too large");
      power = static_cast<int>(k.get_si());
    }
    e[idx] += power;
  }

  std::string s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
};

}  // namespace

HomogeneousPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw ParseError(ParseError::Kind::Syntax, "duplicate variable '" + vars[i] + "'");
  return PolyParser(text, vars).parse();
}

std::vector<std::string> split_vars(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : list) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      if (cur.empty()) throw ParseError(ParseError::Kind::Syntax, "empty variable name");
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (cur.empty()) throw ParseError(ParseError::Kind::Syntax, "empty variable name");
  out.push_back(cur);
  return out;
}

std::vector<std::int64_t> generic_linear_form(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> c(n);
  for (auto& v : c) v = 1 + static_cast<std::int64_t>(rng() >> 44);
  return c;
}

}  // namespace kspec
