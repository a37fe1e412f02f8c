#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace catpascal {

// One bracket symbol.  Decorations live on arcs; in a canonical word the
// mark of an arc sits on its open symbol and closes carry mark 0.
struct Sym {
  bool open = true;
  int mark = 0;

  friend bool operator==(const Sym&, const Sym&) = default;
  friend auto operator<=>(const Sym&, const Sym&) = default;
};

using Word = std::vector<Sym>;

using MarkFormatter = std::function<std::string(int)>;
using MarkParser = std::function<int(std::string_view)>;

// "(" and ")" with an optional mark token immediately after each "(".
std::string format_word(const Word& w, const MarkFormatter& fmt = {});
Word parse_word(std::string_view s, const MarkParser& parse = {});

// Every prefix has at least as many opens as closes.
bool is_standard(const Word& w);
bool is_balanced(const Word& w);

// partner[i] is the matching position, or -1 for an unmatched open.
std::vector<int> partners(const Word& w);
// Number of enclosing arcs of each symbol (unmatched opens included).
std::vector<int> depths(const Word& w);
int unmatched(const Word& w);
std::vector<int> unmatched_positions(const Word& w);

// Copies each arc's mark onto both of its symbols.
std::vector<int> arc_marks(const Word& w);
Word canonical(Word w);

// Reverse, swap open and close, keep every arc's mark on its new open.
Word reverse_flip(const Word& w);

// Cuts a full word of length 2n after position n.  The second half is read
// from the far end.  The mark of a line crossing the cut is copied to both
// halves.
std::pair<Word, Word> split_word(const Word& full);
// Inverse of split_word; lines are joined by rank and the mark of a joined
// line is line_mark(mark in first, mark in second).
Word join_words(const Word& first, const Word& second,
                const std::function<int(int, int)>& line_mark);

// All standard words of length n over plain symbols, in lexicographic
// order with "(" < ")".
std::vector<Word> standard_words(int n);
std::vector<Word> balanced_words(int pairs);

// Arc picture of a word: one row per nesting level, points along the
// bottom, unmatched opens as vertical lines.
std::string render_arcs(const Word& w, const MarkFormatter& fmt = {});

}  // namespace catpascal
