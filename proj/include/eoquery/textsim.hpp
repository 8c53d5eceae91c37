#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eoquery/core.hpp"

namespace eoquery {

inline constexpr double k_default_cutoff = 0.7;

// Lowercase, keep [a-z0-9] and non-ASCII bytes, map everything else to a
// space, then collapse runs and trim. Underscores count as separators, so
// "burn_scars" and "Burn Scars" normalize identically.
inline std::string normalize_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (const char c : text) {
        const auto u = static_cast<unsigned char>(c);
        char keep = 0;
        if (u >= 'a' && u <= 'z')
            keep = c;
        else if (u >= 'A' && u <= 'Z')
            keep = static_cast<char>(c + 32);
        else if (u >= '0' && u <= '9')
            keep = c;
        else if (u >= 128)
            keep = c;
        if (keep) {
            if (pending_space && !out.empty())
                out += ' ';
            pending_space = false;
            out += keep;
        } else {
            pending_space = true;
        }
    }
    return out;
}

inline std::vector<std::string> tokenize(std::string_view normalized) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < normalized.size()) {
        std::size_t j = normalized.find(' ', i);
        if (j == std::string_view::npos)
            j = normalized.size();
        if (j > i)
            tokens.emplace_back(normalized.substr(i, j - i));
        i = j + 1;
    }
    return tokens;
}

// Length of the longest common subsequence, two-row DP.
inline std::size_t lcs_length(std::string_view a, std::string_view b) {
    if (a.empty() || b.empty())
        return 0;
    std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

// Minimum number of insertions + deletions turning a into b (no
// substitutions), via distance = |a| + |b| - 2 * LCS(a, b).
inline long indel_distance(std::string_view a, std::string_view b) {
    return static_cast<long>(a.size() + b.size()) - 2 * static_cast<long>(lcs_length(a, b));
}

// Normalized similarity in [0, 1]: 1 - distance / (|a| + |b|). Two empty
// strings are identical (1.0).
inline double indel_similarity(std::string_view a, std::string_view b) {
    const std::size_t total = a.size() + b.size();
    if (total == 0)
        return 1.0;
    return 1.0 - static_cast<double>(indel_distance(a, b)) / static_cast<double>(total);
}

// Surface-form tolerance for free-text fields: exact after normalization, or
// similar enough under the indel measure. Exact matches pass at any cutoff.
inline bool equivalent(std::string_view a, std::string_view b, double cutoff = k_default_cutoff) {
    const std::string na = normalize_text(a);
    const std::string nb = normalize_text(b);
    if (na == nb)
        return true;
    return indel_similarity(na, nb) >= cutoff;
}

// Normalized fuzzy lookup: "Burn Scars" and "burn_scars" both resolve.
inline std::optional<EventType> event_type_from_text(std::string_view text,
                                                     double cutoff = k_default_cutoff) {
    const std::string n = normalize_text(text);
    for (const EventType e : all_event_types())
        if (n == normalize_text(to_string(e)))
            return e;
    for (const EventType e : all_event_types())
        if (indel_similarity(n, normalize_text(to_string(e))) >= cutoff)
            return e;
    return std::nullopt;
}

// Accepted surface forms per event type, used when checking whether an event
// type is actually mentioned in a query. Phrases are stored normalized; the
// canonical name is always included.
class SynonymTable {
public:
    static SynonymTable defaults() {
        SynonymTable t;
        t.add(EventType::flood, {"flood", "floods", "flooding", "flooded", "flood event",
                                 "flooding events"});
        t.add(EventType::burn_scars, {"burn scars", "burn scar", "burned area", "burnt areas"});
        t.add(EventType::crops, {"crops", "crop", "crop type", "crop types", "cropland"});
        return t;
    }

    // JSON object mapping canonical event type -> array of phrases.
    static SynonymTable from_json(const nlohmann::json& doc) {
        if (!doc.is_object())
            throw config_error("synonym file must be a JSON object");
        SynonymTable t;
        for (const auto& [key, value] : doc.items()) {
            const auto event = event_type_from_string(key);
            if (!event)
                throw config_error("synonym file: unknown event type '" + key + "'");
            if (!value.is_array())
                throw config_error("synonym file: value for '" + key + "' must be an array");
            std::vector<std::string> phrases;
            for (const auto& p : value) {
                if (!p.is_string())
                    throw config_error("synonym file: phrases must be strings");
                phrases.push_back(p.get<std::string>());
            }
            t.add(*event, phrases);
        }
        return t;
    }

    static SynonymTable from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open synonym file: " + path);
        nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded())
            throw config_error("synonym file is not valid JSON: " + path);
        return from_json(doc);
    }

    const std::vector<std::string>& phrases(EventType e) const {
        return phrases_.at(e);
    }

    // Which event type (if any) a phrase denotes, by normalized equality.
    std::optional<EventType> match(std::string_view phrase) const {
        const std::string n = normalize_text(phrase);
        for (const auto& [event, list] : phrases_)
            if (std::find(list.begin(), list.end(), n) != list.end())
                return event;
        return std::nullopt;
    }

    nlohmann::json to_json() const {
        nlohmann::json doc = nlohmann::json::object();
        for (const auto& [event, list] : phrases_)
            doc[std::string{to_string(event)}] = list;
        return doc;
    }

private:
    void add(EventType e, const std::vector<std::string>& raw) {
        auto& list = phrases_[e];
        auto push = [&](std::string_view p) {
            std::string n = normalize_text(p);
            if (!n.empty() && std::find(list.begin(), list.end(), n) == list.end())
                list.push_back(std::move(n));
        };
        push(to_string(e));
        for (const auto& p : raw)
            push(p);
    }

    std::map<EventType, std::vector<std::string>> phrases_;
};

namespace detail {

inline bool contains_token_run(const std::vector<std::string>& haystack,
                               const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > haystack.size())
        return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < needle.size(); ++j)
            if (haystack[i + j] != needle[j]) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

}  // namespace detail

// True when the phrase (or, for phrases naming an event type, any accepted
// surface form of that type) appears in the query: either verbatim as a run
// of normalized tokens, or fuzzily against every window of 1..4 query tokens.
inline bool mentioned_in(std::string_view phrase, std::string_view query,
                         const SynonymTable& synonyms, double cutoff = k_default_cutoff) {
    const std::vector<std::string> query_tokens = tokenize(normalize_text(query));
    if (query_tokens.empty())
        return false;

    std::vector<std::string> candidates;
    const std::string n = normalize_text(phrase);
    if (!n.empty())
        candidates.push_back(n);
    if (const auto event = synonyms.match(phrase))
        for (const auto& p : synonyms.phrases(*event))
            if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
                candidates.push_back(p);

    for (const auto& candidate : candidates) {
        if (detail::contains_token_run(query_tokens, tokenize(candidate)))
            return true;
        const std::size_t max_window = std::min<std::size_t>(4, query_tokens.size());
        for (std::size_t w = 1; w <= max_window; ++w) {
            for (std::size_t i = 0; i + w <= query_tokens.size(); ++i) {
                std::string window = query_tokens[i];
                for (std::size_t j = 1; j < w; ++j) {
                    window += ' ';
                    window += query_tokens[i + j];
                }
                if (indel_similarity(window, candidate) >= cutoff)
                    return true;
            }
        }
    }
    return false;
}

}  // namespace eoquery
