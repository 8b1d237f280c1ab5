#include "mzvlab/report.hpp"

#include <sstream>

namespace mzvlab {

std::size_t Report::failed_proved() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.conjectural && !c.pass) ++n;
    return n;
}

std::size_t Report::failed_conjectural() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.conjectural && !c.pass) ++n;
    return n;
}

std::string verdict_word(const CheckRecord& rec) {
    if (rec.conjectural) return rec.pass ? "ok?" : "open?";
    return rec.pass ? "pass" : "FAIL";
}

std::string Report::text(bool with_timings) const {
    std::ostringstream out;
    out << "== " << title << " ==\n";
    for (const auto& [k, v] : provenance) out << "# " << k << "=" << v << "\n";
    for (const auto& c : checks) {
        out << verdict_word(c) << "  " << c.family;
        if (!c.params.empty()) out << "  " << c.params;
        if (!c.residual.empty()) out << "  residual=" << c.residual;
        if (c.flagged) out << "  [interpreted-boundary]";
        if (c.conjectural) out << "  [conjectural]";
        if (!c.note.empty()) out << "  (" << c.note << ")";
        if (with_timings) out << "  " << c.elapsed_ms << "ms";
        out << "\n";
    }
    std::size_t fp = failed_proved();
    std::size_t fc = failed_conjectural();
    out << "summary: " << checks.size() << " checks, " << fp << " proved failures, " << fc
        << " conjectural misses\n";
    return out.str();
}

}  // namespace mzvlab
