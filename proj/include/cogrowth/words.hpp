#ifndef COGROWTH_WORDS_HPP
#define COGROWTH_WORDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cogrowth {

using BigInt = boost::multiprecision::cpp_int;

/// Rank of the ambient free group. Always at least 2.
class Rank {
public:
    explicit Rank(int n);
    int n() const { return n_; }
    /// Number of directed letters: generators plus inverses.
    int num_letters() const { return 2 * n_; }
    friend bool operator==(Rank a, Rank b) { return a.n_ == b.n_; }
    friend bool operator!=(Rank a, Rank b) { return a.n_ != b.n_; }

private:
    int n_;
};

/// A generator or an inverse generator. Encoded as 2*(gen-1) + (inverse? 1 : 0),
/// which is also the column order used in transition tables and graph dumps:
/// a, A, b, B, c, C, ...
class Letter {
public:
    Letter() : code_(0) {}
    static Letter make(int gen, int sign);
    static Letter from_code(int code) { Letter l; l.code_ = code; return l; }

    int code() const { return code_; }
    int gen() const { return code_ / 2 + 1; }
    int sign() const { return (code_ & 1) ? -1 : +1; }
    Letter inverse() const { return from_code(code_ ^ 1); }
    bool valid_for(Rank r) const { return code_ >= 0 && code_ < r.num_letters(); }

    friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
    friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }
    friend bool operator<(Letter a, Letter b) { return a.code_ < b.code_; }

private:
    int code_;
};

/// Freely reduced word over the generators of F_n. The empty word is the identity.
/// The reduction invariant (no adjacent inverse pair) is maintained by construction.
class ReducedWord {
public:
    explicit ReducedWord(Rank rank) : rank_(rank) {}
    /// Reduces an arbitrary letter sequence. Throws std::invalid_argument if a
    /// letter is out of range for the rank.
    ReducedWord(Rank rank, const std::vector<Letter>& raw);

    Rank rank() const { return rank_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter at(std::size_t i) const { return letters_[i]; }

    ReducedWord inverse() const;
    /// Reduced concatenation. Throws on rank mismatch.
    friend ReducedWord operator*(const ReducedWord& u, const ReducedWord& v);
    friend bool operator==(const ReducedWord& u, const ReducedWord& v) {
        return u.rank_ == v.rank_ && u.letters_ == v.letters_;
    }
    friend bool operator!=(const ReducedWord& u, const ReducedWord& v) { return !(u == v); }

private:
    Rank rank_;
    std::vector<Letter> letters_;
};

/// Strips inverse head/tail pairs until the word is cyclically reduced.
/// The result is conjugate to the input and of minimal length in its conjugacy class.
ReducedWord cyclic_reduce(const ReducedWord& w);

bool is_cyclically_reduced(const ReducedWord& w);

/// Number of freely reduced words of length at most radius:
/// 1 + 2n ((2n-1)^R - 1) / (2n-2). Exact at any radius.
BigInt ball_count(Rank rank, int radius);

/// ASCII form: a..z for generators 1..26, uppercase for inverses.
/// Ranks above 26 use x<i>/X<i> tokens instead.
std::string to_string(Letter l, Rank rank);
std::string to_string(const ReducedWord& w);

/// Parses one word. Grammar: a sequence of letters and parenthesized groups,
/// either optionally followed by ^<positive int> repetition. The result is reduced.
ReducedWord parse_word(Rank rank, std::string_view text);

/// Parses a relator file: '#' starts a comment, whitespace separates words.
std::vector<ReducedWord> parse_relator_list(Rank rank, std::istream& in);
std::vector<ReducedWord> parse_relator_list(Rank rank, const std::string& text);

} // namespace cogrowth

#endif
