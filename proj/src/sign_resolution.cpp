#include "prismhom/prismatic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace prismhom {

namespace {

constexpr std::size_t slots = 3;

struct Word
{
    std::string text;
    std::vector<Element> table; // value at index a * |G| + b
};

Element evaluate(std::string_view w, Element a, Element b, const Shalgebra& s)
{
    std::optional<Element> acc;
    for (char c : w) {
        Element x = c == 'a' ? a : c == 'b' ? b : c == 'A' ? s.inverse(a) : s.inverse(b);
        acc = acc ? s.mul(*acc, x) : x;
    }
    return *acc;
}

std::vector<Word> distinct_words(const Shalgebra& s)
{
    const std::size_t g = s.size();
    std::vector<std::string> texts{""};
    std::vector<std::string> all;
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<std::string> next;
        for (const auto& t : texts)
            for (char c : std::string_view("ABab"))
                next.push_back(t + c);
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        texts = std::move(next);
    }
    std::vector<Word> out;
    std::map<std::vector<Element>, std::size_t> seen;
    for (const auto& t : all) {
        Word w{t, std::vector<Element>(g * g)};
        for (Element a = 0; a < g; ++a)
            for (Element b = 0; b < g; ++b)
                w.table[a * g + b] = evaluate(t, a, b, s);
        if (seen.emplace(w.table, out.size()).second)
            out.push_back(std::move(w));
    }
    return out;
}

class Search
{
public:
    Search(const Shalgebra& s, CellKind kind) : s_(s), g_(s.size()), words_(distinct_words(s))
    {
        const std::size_t inst = g_ * g_;
        residue_.assign(inst, std::vector<std::int64_t>(2 * g_ * g_, 0));
        for (Element a = 0; a < g_; ++a)
            for (Element b = 0; b < g_; ++b) {
                auto t = kind == CellKind::B4_1 ? BracketedTuple::from_blocks({{a, b}, {b}})
                                                : BracketedTuple::from_blocks({{a}, {a, b}});
                auto& r = residue_[a * g_ + b];
                const auto d = boundary_generator(t, s);
                for (const auto& [cell, k] : d.terms())
                    r[cell_slot(cell.tuple)] += k;
            }
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = 0; j < words_.size(); ++j)
                candidates_.push_back({i, j});
    }

    void run() { descend(0, 0, 0); }

    std::size_t solutions = 0;
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> first;

private:
    std::size_t cell_slot(const BracketedTuple& t) const
    {
        const std::size_t p = t.block_count() == 2 ? 0 : 1;
        return p * g_ * g_ + t.elements[0] * g_ + t.elements[1];
    }

    void apply(std::size_t c, int sign)
    {
        const auto [i, j] = candidates_[c];
        for (std::size_t inst = 0; inst < g_ * g_; ++inst) {
            const Element x = words_[i].table[inst], y = words_[j].table[inst];
            auto& r = residue_[inst];
            r[x * g_ + y] += sign;
            r[g_ * g_ + y * g_ + s_.act(x, y)] += sign;
            r[g_ * g_ + x * g_ + y] -= sign;
        }
    }

    bool feasible(std::size_t remaining) const
    {
        for (const auto& r : residue_) {
            std::size_t mass = 0;
            for (std::size_t k = 0; k < g_ * g_; ++k)
                mass += static_cast<std::size_t>(std::llabs(r[k]));
            if (mass > remaining)
                return false;
        }
        return true;
    }

    bool solved() const
    {
        for (const auto& r : residue_)
            for (auto v : r)
                if (v != 0)
                    return false;
        return true;
    }

    void descend(std::size_t slot, std::size_t from, int last_sign)
    {
        if (slot == slots) {
            if (solved() && ++solutions == 1)
                first = chosen_;
            return;
        }
        for (std::size_t c = from; c < candidates_.size(); ++c)
            for (int sign : {1, -1}) {
                if (slot > 0 && c == chosen_.back().second.first * words_.size() + chosen_.back().second.second &&
                    sign != last_sign)
                    continue;
                apply(c, sign);
                if (feasible(slots - slot - 1)) {
                    chosen_.push_back({sign, candidates_[c]});
                    descend(slot + 1, c, sign);
                    chosen_.pop_back();
                }
                apply(c, -sign);
            }
    }

    const Shalgebra& s_;
    std::size_t g_;
    std::vector<Word> words_;
    std::vector<std::pair<std::size_t, std::size_t>> candidates_;
    std::vector<std::vector<std::int64_t>> residue_;
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> chosen_;

public:
    const std::vector<Word>& words() const { return words_; }
};

} // namespace

SignResolution resolve_b4_signs(const Shalgebra& s, CellKind kind)
{
    SignResolution out;
    out.kind = kind;
    if (kind != CellKind::B4_1 && kind != CellKind::B4_2) {
        out.message = "only B4_1 and B4_2 carry undetermined signs";
        return out;
    }
    if (!s.is_group()) {
        out.message = "product is not a group";
        return out;
    }
    Search search(s, kind);
    search.run();
    out.solutions = search.solutions;
    if (search.solutions == 0) {
        out.status = SignResolution::Status::no_solution;
        out.message = "no choice of three signed B3 cells with word labels of length <= 3 makes the boundary a cycle";
        return out;
    }
    if (search.solutions > 1) {
        out.status = SignResolution::Status::ambiguous;
        out.message = std::to_string(search.solutions) + " distinct sign and label choices make the boundary a cycle";
        return out;
    }
    out.status = SignResolution::Status::resolved;
    out.message = "unique";
    for (const auto& [sign, pair] : search.first) {
        const auto& w1 = search.words()[pair.first];
        const auto& w2 = search.words()[pair.second];
        out.terms.push_back({sign, w1.text, w2.text, w1.table, w2.table});
    }
    return out;
}

} // namespace prismhom
