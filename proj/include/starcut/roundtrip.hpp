#pragma once

// End-to-end reduction checks: solve the source problem exactly, build the
// gadget, search it with t_max = q (or k), and compare the two decisions.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>

#include "starcut/cut.hpp"
#include "starcut/np_oracles.hpp"
#include "starcut/reductions.hpp"
#include "starcut/solver.hpp"

namespace starcut {

enum class Decision { yes, no, inconclusive };
enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Decision d) {
    return d == Decision::yes ? "YES" : d == Decision::no ? "NO" : "INCONCLUSIVE";
}
inline const char* to_string(Verdict v) {
    return v == Verdict::pass ? "PASS" : v == Verdict::fail ? "FAIL" : "INCONCLUSIVE";
}

struct RoundtripReport {
    Decision source = Decision::no;
    Decision gadget = Decision::no;
    Verdict verdict = Verdict::fail;
    std::optional<bool> forward_ok;  // encoded source solution verified as a cut
    std::optional<bool> decoded;     // gadget certificate decoded to a source solution
    std::string decode_note;
    ReducedInstance reduced;
    SolveResult gadget_result;

    [[nodiscard]] std::string text() const {
        std::ostringstream os;
        os << "decision-source " << to_string(source) << '\n';
        os << "decision-gadget " << to_string(gadget) << '\n';
        os << "verdict " << to_string(verdict) << '\n';
        os << "forward " << (forward_ok ? (*forward_ok ? "OK" : "FAILED") : "skipped") << '\n';
        os << "decode " << (decoded ? (*decoded ? "recovered" : "failed") : "skipped") << '\n';
        if (!decode_note.empty()) os << "c " << decode_note << '\n';
        return os.str();
    }
};

namespace detail {

inline void settle(RoundtripReport& rep) {
    const auto& r = rep.gadget_result;
    if (r.value && *r.value <= rep.reduced.parameter) rep.gadget = Decision::yes;
    else if (r.budget_exhausted) rep.gadget = Decision::inconclusive;
    else rep.gadget = Decision::no;
    if (rep.gadget == Decision::inconclusive) rep.verdict = Verdict::inconclusive;
    else rep.verdict = rep.gadget == rep.source ? Verdict::pass : Verdict::fail;
}

}  // namespace detail

inline RoundtripReport roundtrip_3dm(const ThreeDMInstance& inst, std::size_t M, SearchOptions search = {},
                                     Reduce3dmOptions reduce = {}) {
    RoundtripReport rep;
    const auto matching = solve_3dm(inst);
    rep.source = matching ? Decision::yes : Decision::no;
    rep.reduced = reduce_3dm(inst, M, reduce);
    if (matching) rep.forward_ok = is_structure_cut(rep.reduced.graph, matching_to_cut(rep.reduced, *matching), M);
    search.t_max = rep.reduced.parameter;
    rep.gadget_result = structure_connectivity(rep.reduced.graph, M, search);
    detail::settle(rep);
    if (rep.gadget_result.certificate) {
        const auto dec = extract_matching(rep.reduced, *rep.gadget_result.certificate);
        rep.decoded = dec.value.has_value();
        rep.decode_note = dec.diagnostic;
    }
    return rep;
}

inline RoundtripReport roundtrip_vc(const VertexCoverInstance& inst, SearchOptions search = {}) {
    RoundtripReport rep;
    const auto cover = solve_vertex_cover(inst);
    rep.source = cover ? Decision::yes : Decision::no;
    rep.reduced = reduce_vertex_cover(inst);
    const std::size_t M = rep.reduced.M;
    if (cover) rep.forward_ok = is_substructure_cut(rep.reduced.graph, cover_to_cut(rep.reduced, *cover), M);
    search.t_max = rep.reduced.parameter;
    rep.gadget_result = substructure_connectivity(rep.reduced.graph, M, search);
    detail::settle(rep);
    if (rep.gadget_result.certificate) {
        const auto dec = extract_cover(rep.reduced, *rep.gadget_result.certificate);
        rep.decoded = dec.value.has_value();
        rep.decode_note = dec.diagnostic;
    }
    return rep;
}

}  // namespace starcut
