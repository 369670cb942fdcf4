#include "cogrowth/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cogrowth {

Rank::Rank(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

Letter Letter::make(int gen, int sign) {
    if (gen < 1) throw std::invalid_argument("generator index must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    return from_code(2 * (gen - 1) + (sign < 0 ? 1 : 0));
}

ReducedWord::ReducedWord(Rank rank, const std::vector<Letter>& raw) : rank_(rank) {
    letters_.reserve(raw.size());
    for (Letter l : raw) {
        if (!l.valid_for(rank))
            throw std::invalid_argument("letter out of range for rank " + std::to_string(rank.n()));
        if (!letters_.empty() && letters_.back() == l.inverse())
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

ReducedWord ReducedWord::inverse() const {
    ReducedWord out(rank_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back(it->inverse());
    return out; // reversal of a reduced word is reduced
}

ReducedWord operator*(const ReducedWord& u, const ReducedWord& v) {
    if (u.rank_ != v.rank_) throw std::invalid_argument("rank mismatch in word multiplication");
    ReducedWord out = u;
    for (Letter l : v.letters_) {
        if (!out.letters_.empty() && out.letters_.back() == l.inverse())
            out.letters_.pop_back();
        else
            out.letters_.push_back(l);
    }
    return out;
}

ReducedWord cyclic_reduce(const ReducedWord& w) {
    std::size_t lo = 0, hi = w.length();
    const auto& ls = w.letters();
    while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    ReducedWord out(w.rank());
    std::vector<Letter> mid(ls.begin() + lo, ls.begin() + hi);
    return ReducedWord(w.rank(), mid);
}

bool is_cyclically_reduced(const ReducedWord& w) {
    if (w.length() < 2) return true;
    return w.at(0) != w.at(w.length() - 1).inverse();
}

BigInt ball_count(Rank rank, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    const int q = 2 * rank.n() - 1;
    BigInt total = 1, shell = 2 * rank.n();
    for (int r = 1; r <= radius; ++r) {
        total += shell;
        shell *= q;
    }
    return total;
}

std::string to_string(Letter l, Rank rank) {
    if (rank.n() <= 26) {
        char base = l.sign() > 0 ? 'a' : 'A';
        return std::string(1, static_cast<char>(base + l.gen() - 1));
    }
    return (l.sign() > 0 ? "x" : "X") + std::to_string(l.gen());
}

std::string to_string(const ReducedWord& w) {
    std::string out;
    for (Letter l : w.letters()) out += to_string(l, w.rank());
    return out;
}

namespace {

struct WordParser {
    Rank rank;
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("word parse error at offset " + std::to_string(pos) + ": " + what);
    }

    Letter letter() {
        char c = text[pos];
        if (rank.n() <= 26) {
            ++pos;
            if (c >= 'a' && c <= 'z') return Letter::make(c - 'a' + 1, +1);
            if (c >= 'A' && c <= 'Z') return Letter::make(c - 'A' + 1, -1);
            fail(std::string("unexpected character '") + c + "'");
        }
        if (c != 'x' && c != 'X') fail("expected x<i> or X<i> letter token");
        ++pos;
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("missing generator index after x/X");
        int gen = std::stoi(std::string(text.substr(start, pos - start)));
        return Letter::make(gen, c == 'x' ? +1 : -1);
    }

    int exponent() {
        ++pos; // consume '^'
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("missing exponent after '^'");
        int k = std::stoi(std::string(text.substr(start, pos - start)));
        if (k < 1) fail("exponent must be positive");
        return k;
    }

    std::vector<Letter> sequence(bool inside_group) {
        std::vector<Letter> out;
        while (!done()) {
            char c = peek();
            if (c == ')') {
                if (!inside_group) fail("unmatched ')'");
                return out;
            }
            std::vector<Letter> item;
            if (c == '(') {
                ++pos;
                item = sequence(true);
                if (done() || peek() != ')') fail("unmatched '('");
                ++pos;
            } else {
                item.push_back(letter());
            }
            int rep = 1;
            if (!done() && peek() == '^') rep = exponent();
            for (int i = 0; i < rep; ++i) out.insert(out.end(), item.begin(), item.end());
        }
        if (inside_group) fail("unmatched '('");
        return out;
    }
};

} // namespace

ReducedWord parse_word(Rank rank, std::string_view text) {
    WordParser p{rank, text};
    std::vector<Letter> raw = p.sequence(false);
    return ReducedWord(rank, raw);
}

std::vector<ReducedWord> parse_relator_list(Rank rank, std::istream& in) {
    std::vector<ReducedWord> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) out.push_back(parse_word(rank, token));
    }
    return out;
}

std::vector<ReducedWord> parse_relator_list(Rank rank, const std::string& text) {
    std::istringstream in(text);
    return parse_relator_list(rank, in);
}

} // namespace cogrowth
