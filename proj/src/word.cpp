#include "invgen/word.hpp"

#include <cctype>
#include <sstream>

namespace invgen {

int Word::max_variable() const {
  int max_var = 0;
  for (const Letter& l : letters_)
    if (l.var > max_var) max_var = l.var;
  return max_var;
}

Word reduce(const std::vector<Letter>& raw) {
  Word word;
  for (const Letter& l : raw) {
    if (l.var < 1 || (l.sign != 1 && l.sign != -1))
      throw Error(Errc::InvalidArgument, "letter must have var >= 1 and sign +-1");
    if (!word.letters_.empty() && word.letters_.back().var == l.var &&
        word.letters_.back().sign == -l.sign) {
      word.letters_.pop_back();
    } else {
      word.letters_.push_back(l);
    }
  }
  return word;
}

bool is_reduced_on_tuple(const Word& word, const TupleSpec& spec) {
  if (word.max_variable() > spec.size())
    throw Error(Errc::VariableOutOfRange, "word variable beyond tuple spec");
  // Freely reduced holds by construction of Word; a maximal run of one
  // variable therefore has constant sign and |m| = run length.
  const auto& letters = word.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j].var == letters[i].var) ++j;
    long run = static_cast<long>(j - i);
    long order = spec.order_of(letters[i].var);
    if (order != 0 && run >= order) return false;
    i = j;
  }
  return true;
}

namespace {

// Letter order: x_1 < x_1^{-1} < x_2 < x_2^{-1} < ...
Letter letter_at(int rank) {
  return Letter{rank / 2 + 1, rank % 2 == 0 ? 1 : -1};
}

struct Enumerator {
  int n_vars;
  const TupleSpec& spec;
  const std::function<bool(const Word&)>& visit;
  std::vector<Letter> current;

  bool extend(int remaining) {
    if (remaining == 0) {
      Word word = reduce(current);
      return visit(word);
    }
    for (int rank = 0; rank < 2 * n_vars; ++rank) {
      Letter l = letter_at(rank);
      if (!current.empty()) {
        const Letter& prev = current.back();
        if (prev.var == l.var && prev.sign == -l.sign) continue;  // not reduced
      }
      // Run-length constraint against the order of the entry.
      long order = spec.order_of(l.var);
      if (order != 0) {
        long run = 1;
        for (auto it = current.rbegin(); it != current.rend(); ++it) {
          if (it->var == l.var) ++run;
          else break;
        }
        if (run >= order) continue;
      }
      current.push_back(l);
      bool keep_going = extend(remaining - 1);
      current.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_reduced_word(int n_vars, const TupleSpec& spec, int max_len,
                           const std::function<bool(const Word&)>& visit) {
  if (n_vars < 1 || spec.size() < n_vars)
    throw Error(Errc::InvalidArgument, "enumeration needs orders for every variable");
  for (int len = 1; len <= max_len; ++len) {
    Enumerator e{n_vars, spec, visit, {}};
    if (!e.extend(len)) return false;
  }
  return true;
}

std::vector<Word> enumerate_reduced_words(int n_vars, const TupleSpec& spec,
                                          int max_len) {
  std::vector<Word> words;
  for_each_reduced_word(n_vars, spec, max_len, [&](const Word& w) {
    words.push_back(w);
    return true;
  });
  return words;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << letters_[i].var;
    if (letters_[i].sign < 0) out << "^-1";
  }
  return out.str();
}

Word Word::parse(const std::string& text) {
  std::vector<Letter> raw;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || token[0] != 'x')
      throw Error(Errc::ParseError, "bad word token: " + token);
    std::size_t pos = 1;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])))
      ++pos;
    if (pos == 1) throw Error(Errc::ParseError, "bad word token: " + token);
    int var = std::stoi(token.substr(1, pos - 1));
    int exponent = 1;
    if (pos < token.size()) {
      if (token[pos] != '^')
        throw Error(Errc::ParseError, "bad word token: " + token);
      exponent = std::stoi(token.substr(pos + 1));
    }
    int sign = exponent >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(exponent); ++k) raw.push_back({var, sign});
  }
  return reduce(raw);
}

}  // namespace invgen
