#include "fakenews/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace fakenews::text {

namespace {

bool is_ascii_letter(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }

// Lead byte of a multibyte UTF-8 sequence (or a stray continuation byte;
// both are treated as letter material).
bool is_non_ascii(unsigned char c) { return c >= 0x80; }

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// U+2019 RIGHT SINGLE QUOTATION MARK, the curly apostrophe news sites emit.
bool is_curly_apostrophe(std::string_view s, std::size_t i) {
    return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
           static_cast<unsigned char>(s[i + 1]) == 0x80 &&
           static_cast<unsigned char>(s[i + 2]) == 0x99;
}

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> kAbbrev = {
        "mr", "mrs", "ms", "dr", "prof", "rev", "hon", "gen", "sen", "rep",
        "gov", "capt", "col", "sgt", "maj", "lt", "st", "jr", "sr", "vs",
        "etc", "inc", "ltd", "corp", "dept", "univ", "est", "fig", "vol",
        "approx"};
    return kAbbrev;
}

// Precomposed Latin-1 forms for ASCII letter + combining mark U+0300..U+0308.
// Keyed by (ascii << 8) | (0x300-relative mark index).
const std::unordered_map<unsigned, unsigned>& composition_table() {
    static const std::unordered_map<unsigned, unsigned> kCompose = [] {
        std::unordered_map<unsigned, unsigned> m;
        auto add = [&m](char base, unsigned mark, unsigned composed) {
            m[(static_cast<unsigned>(base) << 8) | (mark - 0x300)] = composed;
        };
        // grave 0x300, acute 0x301, circumflex 0x302, tilde 0x303,
        // macron 0x304 (no Latin-1 target, omitted), diaeresis 0x308
        add('a', 0x300, 0xE0); add('a', 0x301, 0xE1); add('a', 0x302, 0xE2);
        add('a', 0x303, 0xE3); add('a', 0x308, 0xE4);
        add('e', 0x300, 0xE8); add('e', 0x301, 0xE9); add('e', 0x302, 0xEA);
        add('e', 0x308, 0xEB);
        add('i', 0x300, 0xEC); add('i', 0x301, 0xED); add('i', 0x302, 0xEE);
        add('i', 0x308, 0xEF);
        add('o', 0x300, 0xF2); add('o', 0x301, 0xF3); add('o', 0x302, 0xF4);
        add('o', 0x303, 0xF5); add('o', 0x308, 0xF6);
        add('u', 0x300, 0xF9); add('u', 0x301, 0xFA); add('u', 0x302, 0xFB);
        add('u', 0x308, 0xFC);
        add('n', 0x303, 0xF1); add('y', 0x301, 0xFD); add('y', 0x308, 0xFF);
        add('A', 0x300, 0xC0); add('A', 0x301, 0xC1); add('A', 0x302, 0xC2);
        add('A', 0x303, 0xC3); add('A', 0x308, 0xC4);
        add('E', 0x300, 0xC8); add('E', 0x301, 0xC9); add('E', 0x302, 0xCA);
        add('E', 0x308, 0xCB);
        add('I', 0x300, 0xCC); add('I', 0x301, 0xCD); add('I', 0x302, 0xCE);
        add('I', 0x308, 0xCF);
        add('O', 0x300, 0xD2); add('O', 0x301, 0xD3); add('O', 0x302, 0xD4);
        add('O', 0x303, 0xD5); add('O', 0x308, 0xD6);
        add('U', 0x300, 0xD9); add('U', 0x301, 0xDA); add('U', 0x302, 0xDB);
        add('U', 0x308, 0xDC);
        add('N', 0x303, 0xD1); add('Y', 0x301, 0xDD);
        return m;
    }();
    return kCompose;
}

void append_codepoint_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// A combining mark U+0300..U+0308 is the two-byte sequence 0xCC 0x80..0x88.
bool combining_mark_at(std::string_view s, std::size_t i, unsigned& mark) {
    if (i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xCC) {
        unsigned char c2 = static_cast<unsigned char>(s[i + 1]);
        if (c2 >= 0x80 && c2 <= 0x88) {
            mark = 0x300 + (c2 - 0x80);
            return true;
        }
    }
    return false;
}

}  // namespace

std::string normalize(std::string_view raw) {
    std::size_t start = 0;
    if (raw.size() >= 3 && static_cast<unsigned char>(raw[0]) == 0xEF &&
        static_cast<unsigned char>(raw[1]) == 0xBB &&
        static_cast<unsigned char>(raw[2]) == 0xBF) {
        start = 3;
    }
    std::string out;
    out.reserve(raw.size() - start);
    for (std::size_t i = start; i < raw.size();) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        if (c == '\r') {
            out.push_back('\n');
            i += (i + 1 < raw.size() && raw[i + 1] == '\n') ? 2 : 1;
            continue;
        }
        unsigned mark = 0;
        if (!out.empty() && is_ascii_letter(static_cast<unsigned char>(out.back())) &&
            combining_mark_at(raw, i, mark)) {
            auto it = composition_table().find(
                (static_cast<unsigned>(static_cast<unsigned char>(out.back())) << 8) |
                (mark - 0x300));
            if (it != composition_table().end()) {
                out.pop_back();
                append_codepoint_utf8(out, it->second);
                i += 2;
                continue;
            }
        }
        out.push_back(static_cast<char>(c));
        ++i;
    }
    return out;
}

std::vector<TokenSpan> word_spans(std::string_view s) {
    std::vector<TokenSpan> spans;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        bool starts = is_ascii_letter(c) || is_ascii_digit(c) || is_non_ascii(c) ||
                      c == '\'' || c == '-';
        if (!starts) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        bool has_alnum = false;
        while (i < s.size()) {
            unsigned char b = static_cast<unsigned char>(s[i]);
            if (is_ascii_letter(b) || is_ascii_digit(b) || is_non_ascii(b)) {
                has_alnum = true;
                ++i;
            } else if (b == '\'' || b == '-') {
                ++i;
            } else if (is_curly_apostrophe(s, i)) {
                has_alnum = true;  // counted via the non-ascii branch anyway
                i += 3;
            } else {
                break;
            }
        }
        if (has_alnum) spans.push_back({begin, i});
    }
    return spans;
}

std::string lower_ascii(std::string_view token) {
    std::string out(token);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
    });
    return out;
}

std::vector<std::string> words_lower(std::string_view s) {
    std::vector<std::string> out;
    for (const TokenSpan& t : word_spans(s)) {
        out.push_back(lower_ascii(s.substr(t.begin, t.end - t.begin)));
    }
    return out;
}

std::size_t count_codepoints(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;  // skip continuation bytes
    }
    return n;
}

std::size_t count_letters(std::string_view s) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (is_ascii_letter(c)) {
            ++n;
        } else if (c >= 0xC0) {
            ++n;  // lead byte of a non-ASCII codepoint, counted as a letter
        }
    }
    return n;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

namespace {

// Shared boundary scanner. Invokes sink(start, end, next_start) for every
// sentence where [start, end) is the untrimmed sentence text and next_start
// is where the following sentence begins.
template <typename Sink>
void scan_sentences(std::string_view s, Sink sink) {
    std::size_t start = 0;
    std::size_t i = 0;
    auto emit = [&](std::size_t end, std::size_t next) {
        sink(start, end, next);
        start = next;
    };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == '\n') {
            emit(i, i + 1);
            ++i;
            continue;
        }
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        std::size_t run_begin = i;
        while (i < s.size() && (s[i] == '.' || s[i] == '!' || s[i] == '?')) ++i;
        std::size_t after_run = i;
        while (i < s.size() && (s[i] == '"' || s[i] == '\'' || s[i] == ')' || s[i] == ']')) ++i;
        std::size_t after_quotes = i;
        bool at_break = after_quotes >= s.size() ||
                        is_space(static_cast<unsigned char>(s[after_quotes]));
        if (!at_break) continue;
        if (after_run - run_begin == 1 && s[run_begin] == '.') {
            // Lone period: suppress after stoplisted abbreviations and inside
            // dotted acronyms ("U.S.").
            std::size_t we = run_begin;
            std::size_t wb = we;
            while (wb > start) {
                unsigned char p = static_cast<unsigned char>(s[wb - 1]);
                if (is_ascii_letter(p)) {
                    --wb;
                } else {
                    break;
                }
            }
            std::size_t word_len = we - wb;
            if (word_len > 0) {
                std::string w = lower_ascii(s.substr(wb, word_len));
                bool acronym = word_len == 1 && wb > start && s[wb - 1] == '.';
                if (acronym || abbreviations().count(w)) continue;
            }
        }
        std::size_t next = after_quotes;
        while (next < s.size() && is_space(static_cast<unsigned char>(s[next])) &&
               s[next] != '\n') {
            ++next;
        }
        emit(after_quotes, next);
    }
    if (start < s.size()) sink(start, s.size(), s.size());
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view s) {
    std::vector<std::string> out;
    scan_sentences(s, [&](std::size_t b, std::size_t e, std::size_t) {
        std::string_view sent = trim(s.substr(b, e - b));
        if (!sent.empty()) out.emplace_back(sent);
    });
    return out;
}

std::vector<std::size_t> sentence_starts(std::string_view s) {
    std::vector<std::size_t> out;
    bool first = true;
    scan_sentences(s, [&](std::size_t b, std::size_t e, std::size_t next) {
        if (!trim(s.substr(b, e - b)).empty()) {
            if (first) {
                out.push_back(b);
                first = false;
            }
            if (next < s.size()) out.push_back(next);
        }
    });
    return out;
}

CaseShape case_shape(std::string_view token) {
    std::size_t letters = 0, uppers = 0;
    bool first_is_upper = false, first_letter_seen = false;
    bool rest_has_upper = false;
    for (char ch : token) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (!is_ascii_letter(c)) continue;
        bool up = c >= 'A' && c <= 'Z';
        if (!first_letter_seen) {
            first_letter_seen = true;
            first_is_upper = up;
        } else if (up) {
            rest_has_upper = true;
        }
        ++letters;
        if (up) ++uppers;
    }
    if (letters == 0) return CaseShape::Other;
    if (uppers == 0) return CaseShape::Lower;
    if (uppers == letters && letters >= 2) return CaseShape::AllCaps;
    if (first_is_upper && !rest_has_upper) return CaseShape::Capitalized;
    return CaseShape::Other;
}

std::string apply_case(std::string_view replacement, CaseShape shape) {
    std::string out(replacement);
    switch (shape) {
        case CaseShape::AllCaps:
            std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
                return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A')
                                              : static_cast<char>(c);
            });
            break;
        case CaseShape::Capitalized:
            for (char& ch : out) {
                unsigned char c = static_cast<unsigned char>(ch);
                if (c >= 'a' && c <= 'z') {
                    ch = static_cast<char>(c - 'a' + 'A');
                    break;
                }
                if (is_ascii_letter(c)) break;
            }
            break;
        case CaseShape::Lower:
        case CaseShape::Other:
            break;
    }
    return out;
}

}  // namespace fakenews::text
