#include "catpascal/words.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>

namespace catpascal {

std::string format_word(const Word& w, const MarkFormatter& fmt) {
  std::string s;
  for (auto& x : w) {
    if (!x.open) {
      s += ')';
      continue;
    }
    s += '(';
    if (x.mark != 0) s += fmt ? fmt(x.mark) : std::to_string(x.mark);
  }
  return s;
}

Word parse_word(std::string_view s, const MarkParser& parse) {
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i++];
    if (c == ')') {
      w.push_back({false, 0});
    } else if (c == '(') {
      std::size_t j = i;
      while (j < s.size() && s[j] != '(' && s[j] != ')') ++j;
      auto tok = s.substr(i, j - i);
      int mark = 0;
      if (!tok.empty()) {
        if (parse) {
          mark = parse(tok);
        } else {
          if (!std::all_of(tok.begin(), tok.end(), [](char d) { return d >= '0' && d <= '9'; }))
            throw DomainError("bad mark '" + std::string(tok) + "'");
          mark = std::stoi(std::string(tok));
        }
      }
      w.push_back({true, mark});
      i = j;
    } else {
      throw DomainError(std::string("unexpected character in word: ") + c);
    }
  }
  return w;
}

bool is_standard(const Word& w) {
  int h = 0;
  for (auto& x : w) {
    h += x.open ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

bool is_balanced(const Word& w) { return is_standard(w) && unmatched(w) == 0; }

std::vector<int> partners(const Word& w) {
  std::vector<int> p(w.size(), -1), stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].open) {
      stack.push_back(static_cast<int>(i));
    } else {
      if (stack.empty()) throw DomainError("unmatched close bracket");
      p[i] = stack.back();
      p[static_cast<std::size_t>(stack.back())] = static_cast<int>(i);
      stack.pop_back();
    }
  }
  return p;
}

std::vector<int> depths(const Word& w) {
  std::vector<int> d(w.size());
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].open) {
      d[i] = h++;
    } else {
      d[i] = --h;
      if (h < 0) throw DomainError("unmatched close bracket");
    }
  }
  return d;
}

int unmatched(const Word& w) {
  int h = 0;
  for (auto& x : w) h += x.open ? 1 : -1;
  return h;
}

std::vector<int> unmatched_positions(const Word& w) {
  auto p = partners(w);
  std::vector<int> u;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (p[i] < 0) u.push_back(static_cast<int>(i));
  return u;
}

std::vector<int> arc_marks(const Word& w) {
  auto p = partners(w);
  std::vector<int> m(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    m[i] = w[i].open ? w[i].mark : w[static_cast<std::size_t>(p[i])].mark;
  return m;
}

Word canonical(Word w) {
  for (auto& x : w)
    if (!x.open) x.mark = 0;
  return w;
}

namespace {

// Reverse-flip of a segment whose symbols already carry their arc marks.
Word flip_marked(const Word& seg) {
  Word r(seg.rbegin(), seg.rend());
  for (auto& x : r) x.open = !x.open;
  return r;
}

}  // namespace

Word reverse_flip(const Word& w) {
  auto m = arc_marks(w);
  Word a = w;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].mark = m[i];
  return canonical(flip_marked(a));
}

std::pair<Word, Word> split_word(const Word& full) {
  if (full.size() % 2) throw DomainError("full word has odd length");
  auto m = arc_marks(full);
  Word a = full;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].mark = m[i];
  const auto n = static_cast<std::ptrdiff_t>(full.size() / 2);
  Word first(a.begin(), a.begin() + n);
  Word second(a.begin() + n, a.end());
  return {canonical(first), canonical(flip_marked(second))};
}

Word join_words(const Word& first, const Word& second,
                const std::function<int(int, int)>& line_mark) {
  if (first.size() != second.size()) throw DomainError("halves of different sizes");
  auto u1 = unmatched_positions(first);
  auto u2 = unmatched_positions(second);
  if (u1.size() != u2.size()) throw DomainError("halves over different vertices");
  Word a = first;
  for (std::size_t j = 0; j < u1.size(); ++j) {
    auto& s1 = a[static_cast<std::size_t>(u1[j])];
    s1.mark = line_mark(s1.mark, second[static_cast<std::size_t>(u2[j])].mark);
  }
  auto m2 = arc_marks(second);
  Word b = second;
  for (std::size_t i = 0; i < b.size(); ++i) b[i].mark = m2[i];
  for (auto p : u2) b[static_cast<std::size_t>(p)].mark = 0;
  Word tail = flip_marked(b);
  a.insert(a.end(), tail.begin(), tail.end());
  return canonical(a);
}

namespace {

void grow(int n, int h, Word& cur, std::vector<Word>& out, bool closed) {
  int left = n - static_cast<int>(cur.size());
  if (left == 0) {
    if (!closed || h == 0) out.push_back(cur);
    return;
  }
  if (!closed || h + 1 <= left - 1) {
    cur.push_back({true, 0});
    grow(n, h + 1, cur, out, closed);
    cur.pop_back();
  }
  if (h > 0) {
    cur.push_back({false, 0});
    grow(n, h - 1, cur, out, closed);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> standard_words(int n) {
  std::vector<Word> out;
  Word cur;
  grow(n, 0, cur, out, false);
  return out;
}

std::vector<Word> balanced_words(int pairs) {
  std::vector<Word> out;
  Word cur;
  grow(2 * pairs, 0, cur, out, true);
  return out;
}

std::string render_arcs(const Word& w, const MarkFormatter& fmt) {
  const auto n = w.size();
  auto p = partners(w);
  auto tag = [&](int m) { return fmt ? fmt(m) : std::to_string(m); };
  // height of an arc: 1 + tallest arc nested inside it
  std::vector<int> height(n, 0);
  std::vector<int> inner;
  int rows = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].open) {
      inner.push_back(0);
    } else if (p[i] >= 0) {
      int h = inner.back() + 1;
      inner.pop_back();
      height[i] = height[static_cast<std::size_t>(p[i])] = h;
      if (!inner.empty()) inner.back() = std::max(inner.back(), h);
      rows = std::max(rows, h);
    }
  }
  if (rows == 0 && n > 0) rows = 1;
  const std::size_t width = n == 0 ? 0 : 2 * n - 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(width, ' '));
  std::vector<std::string> labels(static_cast<std::size_t>(rows));
  auto row_of = [&](int h) { return static_cast<std::size_t>(rows - h); };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = 2 * i;
    if (p[i] < 0) {
      for (auto& row : grid) row[c] = '|';
      continue;
    }
    if (!w[i].open) continue;
    const std::size_t e = 2 * static_cast<std::size_t>(p[i]);
    const std::size_t r = row_of(height[i]);
    grid[r][c] = '+';
    grid[r][e] = '+';
    for (std::size_t k = c + 1; k < e; ++k) grid[r][k] = '-';
    for (std::size_t k = r + 1; k < grid.size(); ++k) grid[k][c] = grid[k][e] = '|';
    if (w[i].mark != 0)
      labels[r] += (labels[r].empty() ? "  " : " ") + std::to_string(i + 1) + ":" + tag(w[i].mark);
  }
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    auto line = grid[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + labels[r] + '\n';
  }
  std::string pts;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) pts += ' ';
    pts += static_cast<char>('0' + (i + 1) % 10);
  }
  std::string tail;
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] < 0 && w[i].mark != 0)
      tail += (tail.empty() ? "  " : " ") + std::to_string(i + 1) + ":" + tag(w[i].mark);
  return out + pts + tail + '\n';
}

}  // namespace catpascal
