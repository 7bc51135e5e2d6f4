#include "words.hpp"

#include <map>
#include <sstream>

namespace mouldcalc {

std::vector<IndexWord> shuffle_set(const IndexWord &u, const IndexWord &v)
{
    if (u.empty())
        return {v};
    if (v.empty())
        return {u};
    std::vector<IndexWord> out;
    IndexWord utail(u.begin() + 1, u.end());
    for (auto w : shuffle_set(utail, v)) {
        w.insert(w.begin(), u.front());
        out.push_back(std::move(w));
    }
    IndexWord vtail(v.begin() + 1, v.end());
    for (auto w : shuffle_set(u, vtail)) {
        w.insert(w.begin(), v.front());
        out.push_back(std::move(w));
    }
    return out;
}

int StuffleWord::contractions() const
{
    int n = 0;
    for (const auto &s : slots)
        if (s.contracted())
            ++n;
    return n;
}

std::string StuffleWord::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i)
            os << ",";
        if (slots[i].contracted())
            os << slots[i].first << "+" << slots[i].second;
        else
            os << slots[i].first;
    }
    os << ")";
    return os.str();
}

std::vector<StuffleWord> stuffle_set(const IndexWord &y1, const IndexWord &y2)
{
    if (y1.empty()) {
        StuffleWord w;
        for (int i : y2)
            w.slots.push_back({i, 0});
        return {w};
    }
    if (y2.empty()) {
        StuffleWord w;
        for (int i : y1)
            w.slots.push_back({i, 0});
        return {w};
    }
    std::vector<StuffleWord> out;
    IndexWord t1(y1.begin() + 1, y1.end());
    IndexWord t2(y2.begin() + 1, y2.end());
    for (auto w : stuffle_set(t1, y2)) {
        w.slots.insert(w.slots.begin(), {y1.front(), 0});
        out.push_back(std::move(w));
    }
    for (auto w : stuffle_set(y1, t2)) {
        w.slots.insert(w.slots.begin(), {y2.front(), 0});
        out.push_back(std::move(w));
    }
    for (auto w : stuffle_set(t1, t2)) {
        w.slots.insert(w.slots.begin(), {y1.front(), y2.front()});
        out.push_back(std::move(w));
    }
    return out;
}

long stuffle_count(int r, int s)
{
    if (r == 0 || s == 0)
        return 1;
    thread_local std::map<std::pair<int, int>, long> cache;
    auto key = std::make_pair(r, s);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    long n = stuffle_count(r - 1, s) + stuffle_count(r, s - 1) + stuffle_count(r - 1, s - 1);
    cache[key] = n;
    return n;
}

} // namespace mouldcalc
