#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidauto {

struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct certification_error : input_error {
  explicit certification_error(const std::string& msg) : input_error(msg) {}
};

struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// One signed basis letter x_index^sign. Index 0 is reserved for the central
// letter y in input sequences; reduced words keep y separately (see Word).
struct Letter {
  int index = 1;
  int sign = +1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inv(Letter a) { return {a.index, -a.sign}; }

// Freely reduced word over x_1..x_rank, optionally times a central power y^ypow.
// y commutes with everything, so its exponent is normalized out of the letter
// sequence; equality is plain field equality.
struct Word {
  int rank = 1;
  std::vector<Letter> letters;
  long long ypow = 0;
  friend bool operator==(const Word&, const Word&) = default;
};

inline Word empty_word(int rank) { return Word{rank, {}, 0}; }

inline Word reduce(const std::vector<Letter>& raw, int rank) {
  if (rank < 1) throw input_error("word rank must be at least 1");
  Word w;
  w.rank = rank;
  for (const Letter& a : raw) {
    if (a.index < 0 || a.index > rank)
      throw input_error("letter index " + std::to_string(a.index) +
                        " out of range for rank " + std::to_string(rank));
    if (a.sign != 1 && a.sign != -1) throw input_error("letter sign must be +1 or -1");
    if (a.index == 0) {
      w.ypow += a.sign;
      continue;
    }
    if (!w.letters.empty() && w.letters.back() == inv(a))
      w.letters.pop_back();
    else
      w.letters.push_back(a);
  }
  return w;
}

inline Word word_inverse(const Word& w) {
  Word r;
  r.rank = w.rank;
  r.ypow = -w.ypow;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(inv(*it));
  return r;
}

inline Word word_product(const Word& u, const Word& v) {
  if (u.rank != v.rank)
    throw input_error("rank mismatch in word product: " + std::to_string(u.rank) + " vs " +
                      std::to_string(v.rank));
  Word r = u;
  r.ypow += v.ypow;
  for (const Letter& a : v.letters) {
    if (!r.letters.empty() && r.letters.back() == inv(a))
      r.letters.pop_back();
    else
      r.letters.push_back(a);
  }
  return r;
}

inline Word word_power(const Word& w, long long e) {
  Word base = e < 0 ? word_inverse(w) : w;
  Word r = empty_word(w.rank);
  for (long long i = 0, m = e < 0 ? -e : e; i < m; ++i) r = word_product(r, base);
  return r;
}

// Exponent sum over the x-letters; the central y does not count.
inline long long algebraic_length(const Word& w) {
  long long s = 0;
  for (const Letter& a : w.letters) s += a.sign;
  return s;
}

struct CyclicParts {
  Word prefix;  // conjugator, never has a y part
  Word core;    // cyclically reduced, carries the y power
};

inline CyclicParts cyclic_reduce(const Word& w) {
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == inv(w.letters[hi - 1])) {
    ++lo;
    --hi;
  }
  CyclicParts parts;
  parts.prefix.rank = w.rank;
  parts.prefix.letters.assign(w.letters.begin(), w.letters.begin() + lo);
  parts.core.rank = w.rank;
  parts.core.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
  parts.core.ypow = w.ypow;
  return parts;
}

struct GeneratorConjugate {
  int index = 0;  // the positive generator x_index at the core
  Word conjugator;
};

// Writes w as u * x_k * u^-1 with x_k a single positive letter, if possible.
// The conjugator is the cyclic-reduction prefix, hence canonical.
inline std::optional<GeneratorConjugate> generator_conjugate_decompose(const Word& w) {
  if (w.ypow != 0) return std::nullopt;
  CyclicParts parts = cyclic_reduce(w);
  if (parts.core.letters.size() != 1) return std::nullopt;
  Letter a = parts.core.letters[0];
  if (a.sign != +1) return std::nullopt;
  return GeneratorConjugate{a.index, parts.prefix};
}

inline Word delta_word(int n) {
  Word d;
  d.rank = n;
  for (int i = 1; i <= n; ++i) d.letters.push_back({i, +1});
  return d;
}

// Writes w as u * (x_1..x_n) * u^-1 if possible. The cyclic core of any
// conjugate of Delta is a rotation of Delta starting at some x_k, and the
// canonical conjugator is prefix * (x_1..x_{k-1})^-1. Other conjugators differ
// by right factors Delta^m, shifting algebraic length by multiples of n.
inline std::optional<Word> delta_conjugator(const Word& w, int n) {
  if (w.rank != n) throw input_error("delta_conjugator: word rank differs from n");
  if (w.ypow != 0) throw input_error("delta_conjugator: word has a y part");
  CyclicParts parts = cyclic_reduce(w);
  if ((int)parts.core.letters.size() != n) return std::nullopt;
  int k = parts.core.letters[0].index;
  for (int t = 0; t < n; ++t) {
    Letter a = parts.core.letters[t];
    if (a.sign != +1 || a.index != (k - 1 + t) % n + 1) return std::nullopt;
  }
  Word head;
  head.rank = n;
  for (int i = 1; i < k; ++i) head.letters.push_back({i, +1});
  return word_product(parts.prefix, word_inverse(head));
}

// --- text grammar ------------------------------------------------------------
// Tokens separated by whitespace. Token = x<k> or y, optionally ^<e> with e a
// nonzero signed integer. Serialization emits the reduced normal form with
// maximal runs folded into exponents and the y power trailing.

inline std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Splits "<head>^<e>" and returns e (1 when no caret). Throws on a malformed or
// zero exponent; `where` names the token position in error messages.
inline long long take_exponent(std::string& tok, const std::string& where) {
  size_t caret = tok.find('^');
  if (caret == std::string::npos) return 1;
  std::string es = tok.substr(caret + 1);
  tok = tok.substr(0, caret);
  if (es.empty()) throw input_error("missing exponent at " + where);
  size_t pos = 0;
  bool negative = false;
  if (es[0] == '+' || es[0] == '-') {
    negative = es[0] == '-';
    pos = 1;
  }
  if (pos == es.size()) throw input_error("missing exponent digits at " + where);
  long long mag = 0;
  for (; pos < es.size(); ++pos) {
    if (es[pos] < '0' || es[pos] > '9') throw input_error("bad exponent at " + where);
    mag = mag * 10 + (es[pos] - '0');
    if (mag > 1000000) throw input_error("exponent too large at " + where);
  }
  if (mag == 0) throw input_error("zero exponent at " + where);
  return negative ? -mag : mag;
}

inline int parse_generator_index(const std::string& digits, const std::string& where) {
  if (digits.empty()) throw input_error("missing generator index at " + where);
  long long v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw input_error("bad generator index at " + where);
    v = v * 10 + (c - '0');
    if (v > 1000000) throw input_error("generator index too large at " + where);
  }
  return (int)v;
}

inline Word parse_word(const std::string& text, int rank) {
  std::vector<Letter> raw;
  std::vector<std::string> tokens = split_tokens(text);
  for (size_t t = 0; t < tokens.size(); ++t) {
    std::string tok = tokens[t];
    std::string where = "token " + std::to_string(t + 1);
    long long e = take_exponent(tok, where);
    int index;
    if (tok == "y") {
      index = 0;
    } else if (tok.size() >= 2 && tok[0] == 'x') {
      index = parse_generator_index(tok.substr(1), where);
      if (index < 1 || index > rank)
        throw input_error("generator " + tok + " out of range at " + where);
    } else {
      throw input_error("unknown token '" + tokens[t] + "' at " + where);
    }
    int s = e < 0 ? -1 : +1;
    for (long long i = 0, m = e < 0 ? -e : e; i < m; ++i) raw.push_back({index, s});
  }
  return reduce(raw, rank);
}

inline std::string format_word(const Word& w) {
  std::string out;
  auto emit = [&out](const std::string& head, long long e) {
    if (!out.empty()) out += ' ';
    out += head;
    if (e != 1) out += "^" + std::to_string(e);
  };
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    emit("x" + std::to_string(w.letters[i].index), (long long)(j - i) * w.letters[i].sign);
    i = j;
  }
  if (w.ypow != 0) emit("y", w.ypow);
  return out;
}

}  // namespace braidauto
