#pragma once

#include <string>
#include <string_view>

namespace eoquery::prompts {

// System prompt for single-shot extraction. Every pipeline variant builds on
// this wording so spend comparisons measure strategy, not prompt drift.
inline constexpr std::string_view k_extraction_system =
    "You translate natural-language Earth-observation imagery requests into a single JSON "
    "object.\n"
    "Extract exactly these keys:\n"
    "- \"area\": the location of interest, copied from the query.\n"
    "- \"date\": the date of interest as YYYY-MM-DD. When the query names a time window, give "
    "the first date of the window; a two-element array [first, last] is acceptable. Never a "
    "future date: resolve relative wording against the \"Today is ...\" date stated in the "
    "query.\n"
    "- \"event_type\": one of \"flood\", \"burn_scars\", \"crops\".\n"
    "- \"error\": a short message when a parameter cannot be determined from the query; omit "
    "this key otherwise.\n"
    "Respond with the JSON object only.";

// Appended to the extraction system prompt for the chain-of-thought variant.
inline constexpr std::string_view k_cot_addendum =
    "\nFirst reason step by step about the location, the event type, and especially how the "
    "stated \"Today is ...\" date turns the query's time wording into a concrete date. After "
    "the reasoning, output the JSON object on its own final line.";

inline constexpr std::string_view k_refine_system =
    "You review a draft JSON answer that was extracted from an Earth-observation imagery "
    "request. Check it against the query: keys must be exactly \"area\", \"date\", "
    "\"event_type\" and optionally \"error\"; \"date\" must be YYYY-MM-DD, the first date of "
    "the requested window, never in the future; \"event_type\" must be one of \"flood\", "
    "\"burn_scars\", \"crops\"; \"area\" must name the queried location. If the draft is "
    "already correct, return it unchanged. Respond with the final JSON object only.";

inline constexpr std::string_view k_split_area_event_system =
    "From the Earth-observation imagery request, extract only the location and the event "
    "type. Respond with a JSON object holding exactly \"area\" (the location, copied from the "
    "query) and \"event_type\" (one of \"flood\", \"burn_scars\", \"crops\"). Respond with "
    "the JSON object only.";

inline constexpr std::string_view k_split_date_system =
    "From the Earth-observation imagery request, extract only the date of interest. Respond "
    "with a JSON object holding exactly \"date\" as YYYY-MM-DD: the first date of the "
    "requested window, never in the future, resolved against the \"Today is ...\" date stated "
    "in the query. Respond with the JSON object only.";

inline constexpr std::string_view k_synthesize_system =
    "Merge the partial answers extracted from the same Earth-observation imagery request into "
    "one final JSON object with the keys \"area\", \"date\", \"event_type\" and optionally "
    "\"error\". Prefer each partial for the keys it was dedicated to. If a required parameter "
    "is still missing, add a short \"error\" message saying so. Respond with the JSON object "
    "only.";

inline constexpr std::string_view k_judge_system =
    "You judge whether the date or dates in a generated answer are consistent with the user's "
    "imagery request: derivable from the request's own wording and its \"Today is ...\" date, "
    "without any reference answer. Begin your reply with the single word \"consistent\" or "
    "\"inconsistent\", then give a brief justification.";

inline std::string extraction_user_message(std::string_view query) {
    std::string out{"Query: "};
    out += query;
    out += "\nAnswer:";
    return out;
}

inline std::string judge_user_message(std::string_view query, std::string_view answer_json) {
    std::string out{"Query: "};
    out += query;
    out += "\n\nAnswer: ";
    out += answer_json;
    out += "\n\nAre the answer's dates consistent with the query?";
    return out;
}

}  // namespace eoquery::prompts
