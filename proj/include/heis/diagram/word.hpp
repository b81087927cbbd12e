#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

enum class Dir : unsigned char { Up, Down };

inline Dir flip(Dir d) { return d == Dir::Up ? Dir::Down : Dir::Up; }

// Object word: sequence of Up/Down letters, positions left to right; empty = unit.
using Word = std::vector<Dir>;

inline Word word_parse(const std::string& s) {
    Word w;
    if (s == "1") return w;
    for (char c : s) {
        if (c == 'u') w.push_back(Dir::Up);
        else if (c == 'd') w.push_back(Dir::Down);
        else throw std::invalid_argument("word_parse: expected u/d/1, got: " + s);
    }
    return w;
}

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (Dir d : w) s += (d == Dir::Up ? 'u' : 'd');
    return s;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline Word word_up(int n) { return Word(n, Dir::Up); }
inline Word word_down(int n) { return Word(n, Dir::Down); }

// 180-degree rotation: reverse order and flip letters.
inline Word word_rotate(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Dir& d : out) d = flip(d);
    return out;
}

// Horizontal-axis reflection: flip letters, keep order.
inline Word word_reflect(const Word& w) {
    Word out = w;
    for (Dir& d : out) d = flip(d);
    return out;
}

}  // namespace heis
