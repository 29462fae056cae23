#include "perdoub/fife.hpp"

#include <algorithm>
#include <set>

#include "perdoub/config.hpp"
#include "perdoub/goodness.hpp"

namespace perdoub {

FifeWord parse_fife_word(std::string_view text) {
  FifeWord f;
  f.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': f.push_back(FifeLetter::alpha); break;
      case 'b': f.push_back(FifeLetter::beta); break;
      case 'g': f.push_back(FifeLetter::gamma); break;
      default:
        throw Error(Errc::bad_word,
                    std::string("not a word over {a,b,g}: \"") +
                        std::string(text) + "\"");
    }
  }
  return f;
}

std::string fife_text(const FifeWord& f) {
  std::string out;
  out.reserve(f.size());
  for (FifeLetter l : f) out.push_back(static_cast<char>(l));
  return out;
}

std::optional<std::size_t> max_suffix_exponent(const Word& w) {
  std::optional<std::size_t> best;
  Word image = "01";
  std::size_t n = 0;
  while (image.size() <= w.size()) {
    if (w.compare(w.size() - image.size(), image.size(), image) == 0) best = n;
    image = apply_morphism(period_doubling(), image);
    ++n;
  }
  return best;
}

Word apply_fife_letter(const Word& w, FifeLetter letter) {
  const auto n = max_suffix_exponent(w);
  if (!n) {
    throw Error(Errc::no_suffix_01,
                "word has no suffix of the form delta^n(01): \"" + w + "\"");
  }
  Word tail;
  switch (letter) {
    case FifeLetter::alpha: tail = "00"; break;
    case FifeLetter::beta: tail = "0100"; break;
    case FifeLetter::gamma: tail = "010100"; break;
  }
  for (std::size_t k = 0; k < *n; ++k) {
    tail = apply_morphism(period_doubling(), tail);
  }
  return w + tail;
}

Word bullet(const Word& seed, const FifeWord& f) {
  Word w = seed;
  for (FifeLetter l : f) w = apply_fife_letter(w, l);
  return w;
}

int FifeAutomaton::step(int state, FifeLetter letter) const {
  int col = 0;
  switch (letter) {
    case FifeLetter::alpha: col = 0; break;
    case FifeLetter::beta: col = 1; break;
    case FifeLetter::gamma: col = 2; break;
  }
  return next_[static_cast<std::size_t>(state)][static_cast<std::size_t>(col)];
}

int FifeAutomaton::walk(const FifeWord& f) const {
  int state = 0;
  for (FifeLetter l : f) state = step(state, l);
  return state;
}

std::optional<std::size_t> FifeAutomaton::first_sink_prefix(const FifeWord& f) const {
  int state = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    state = step(state, f[i]);
    if (state == kSink) return i + 1;
  }
  return std::nullopt;
}

const FifeAutomaton& automaton_01() {
  // rows: a b c d sink; columns: alpha beta gamma
  static const FifeAutomaton a({"a", "b", "c", "d", "sink"},
                               {{{0, 1, 2},
                                 {3, 1, 2},
                                 {3, 4, 2},
                                 {1, 2, 4},
                                 {4, 4, 4}}});
  return a;
}

const FifeAutomaton& automaton_001() {
  // rows: a b c bga sink; columns: alpha beta gamma
  static const FifeAutomaton a({"a", "b", "c", "bga", "sink"},
                               {{{0, 1, 4},
                                 {0, 1, 2},
                                 {3, 1, 2},
                                 {1, 2, 4},
                                 {4, 4, 4}}});
  return a;
}

const FifeAutomaton& automaton_for_seed(const Word& seed) {
  if (seed == "01") return automaton_01();
  if (seed == "001") return automaton_001();
  throw Error(Errc::usage, "seed must be 01 or 001, got \"" + seed + "\"");
}

bool has_ideal_factor(const FifeWord& f) {
  const auto at = [&](std::size_t i, FifeLetter l) {
    return i < f.size() && f[i] == l;
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    // (b+g)(aa)*a(g+bb): a maximal odd run of alphas, then g or bb. Stopping
    // inside the run would leave the next letter alpha, never g or b.
    if (f[i] == FifeLetter::beta || f[i] == FifeLetter::gamma) {
      std::size_t j = i + 1;
      std::size_t run = 0;
      while (at(j, FifeLetter::alpha)) {
        ++j;
        ++run;
      }
      if (run >= 1 && run % 2 == 1) {
        if (at(j, FifeLetter::gamma) ||
            (at(j, FifeLetter::beta) && at(j + 1, FifeLetter::beta))) {
          return true;
        }
      }
    }
    // g(ab)*ag
    if (f[i] == FifeLetter::gamma) {
      std::size_t j = i + 1;
      while (at(j, FifeLetter::alpha)) {
        if (at(j + 1, FifeLetter::gamma)) return true;
        if (!at(j + 1, FifeLetter::beta)) break;
        j += 2;
      }
    }
  }
  return false;
}

namespace {

bool extend_dfs(Word& w, std::size_t left) {
  if (left == 0) return true;
  for (char c : {'0', '1'}) {
    w.push_back(c);
    if (!suffix_violation(w) && extend_dfs(w, left - 1)) {
      w.pop_back();
      return true;
    }
    w.pop_back();
  }
  return false;
}

}  // namespace

bool extendable(const Word& w, std::size_t horizon) {
  if (!is_good(w)) return false;
  Word scratch = w;
  scratch.reserve(w.size() + horizon);
  return extend_dfs(scratch, horizon);
}

std::size_t fife_depth_bound() { return defaults().fife_depth_bound; }

namespace {

void accepted_rec(const FifeAutomaton& aut, int state, Word& cur,
                  std::size_t left, std::set<Word>& out) {
  if (left == 0) {
    out.insert(cur);
    return;
  }
  for (FifeLetter l :
       {FifeLetter::alpha, FifeLetter::beta, FifeLetter::gamma}) {
    const int next = aut.step(state, l);
    if (next == FifeAutomaton::kSink) continue;
    const std::size_t old_len = cur.size();
    cur = apply_fife_letter(cur, l);
    accepted_rec(aut, next, cur, left - 1, out);
    cur.resize(old_len);
  }
}

}  // namespace

std::vector<Word> accepted_words(const Word& seed, std::size_t depth) {
  if (depth > fife_depth_bound()) {
    throw Error(Errc::bound_exceeded,
                "depth " + std::to_string(depth) + " exceeds bound " +
                    std::to_string(fife_depth_bound()));
  }
  const FifeAutomaton& aut = automaton_for_seed(seed);
  std::set<Word> out;
  Word cur = seed;
  accepted_rec(aut, 0, cur, depth, out);
  return std::vector<Word>(out.begin(), out.end());
}

}  // namespace perdoub
