#include "rtfin/cli/records.hpp"

#include <sstream>

namespace rtfin::cli {

namespace {

using nlohmann::json;

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

void fill_common(ReportRecord& rec, const FinitenessVerdict& v) {
  rec.verdict = to_string(v.verdict);
  rec.provenance = v.provenance.to_string();
  rec.crosscheck = to_string(v.crosscheck);
  rec.experimental = v.experimental;
  rec.dimension_zero = v.dimension_zero;
  rec.notes = v.notes;
  if (v.clause) rec.clause = v.clause->clause;
  if (v.report) {
    rec.dimension = static_cast<int>(v.report->ratios.size());
    if (v.report->witness) {
      const auto& ratio = v.report->witness_ratio();
      rec.witness = WitnessRecord{v.report->witness->k.k(),
                                  static_cast<int>(v.report->witness->ratio_index), ratio.id(),
                                  ratio.form};
    }
  }
  if (v.documented) {
    rec.documented_witness = DocumentedWitnessRecord{v.documented->k, v.documented->ratio,
                                                     v.documented->form,
                                                     std::string(to_string(v.documented->sign)),
                                                     v.documented->confirmed};
  }
}

}  // namespace

ReportRecord make_torus_record(int r, int c, int p, const FinitenessVerdict& v) {
  ReportRecord rec;
  rec.command = "decide-torus";
  rec.r = r;
  rec.c = c;
  rec.p = p;
  fill_common(rec, v);
  return rec;
}

ReportRecord make_closed_record(int r, int p, int g, const FinitenessVerdict& v) {
  ReportRecord rec;
  rec.command = "decide-closed";
  rec.r = r;
  rec.p = p;
  rec.g = g;
  fill_common(rec, v);
  if (v.provenance.kind == Provenance::Kind::ClosedSurfaceRule) rec.notes.insert(rec.notes.begin(), v.provenance.rule);
  return rec;
}

void to_json(json& j, const WitnessRecord& w) {
  j = json{{"k", w.k}, {"ratio_index", w.ratio_index}, {"ratio_id", w.ratio_id}, {"ratio_text", w.ratio_text}};
}

void from_json(const json& j, WitnessRecord& w) {
  j.at("k").get_to(w.k);
  j.at("ratio_index").get_to(w.ratio_index);
  j.at("ratio_id").get_to(w.ratio_id);
  j.at("ratio_text").get_to(w.ratio_text);
}

void to_json(json& j, const DocumentedWitnessRecord& w) {
  j = json{{"k", w.k},
           {"ratio_id", w.ratio_id},
           {"ratio_text", w.ratio_text},
           {"sign", w.sign},
           {"confirmed", w.confirmed}};
}

void from_json(const json& j, DocumentedWitnessRecord& w) {
  j.at("k").get_to(w.k);
  j.at("ratio_id").get_to(w.ratio_id);
  j.at("ratio_text").get_to(w.ratio_text);
  j.at("sign").get_to(w.sign);
  j.at("confirmed").get_to(w.confirmed);
}

void to_json(json& j, const ReportRecord& rec) {
  j = json{{"command", rec.command},
           {"r", rec.r},
           {"c", optional_json(rec.c)},
           {"p", rec.p},
           {"g", optional_json(rec.g)},
           {"dimension", rec.dimension},
           {"verdict", rec.verdict},
           {"provenance", rec.provenance},
           {"clause", optional_json(rec.clause)},
           {"crosscheck", rec.crosscheck},
           {"witness", optional_json(rec.witness)},
           {"documented_witness", optional_json(rec.documented_witness)},
           {"experimental", rec.experimental},
           {"dimension_zero", rec.dimension_zero},
           {"notes", rec.notes},
           {"timing_us", optional_json(rec.timing_us)}};
}

void from_json(const json& j, ReportRecord& rec) {
  j.at("command").get_to(rec.command);
  j.at("r").get_to(rec.r);
  rec.c = optional_from<int>(j, "c");
  j.at("p").get_to(rec.p);
  rec.g = optional_from<int>(j, "g");
  j.at("dimension").get_to(rec.dimension);
  j.at("verdict").get_to(rec.verdict);
  j.at("provenance").get_to(rec.provenance);
  rec.clause = optional_from<int>(j, "clause");
  j.at("crosscheck").get_to(rec.crosscheck);
  rec.witness = optional_from<WitnessRecord>(j, "witness");
  rec.documented_witness = optional_from<DocumentedWitnessRecord>(j, "documented_witness");
  j.at("experimental").get_to(rec.experimental);
  j.at("dimension_zero").get_to(rec.dimension_zero);
  j.at("notes").get_to(rec.notes);
  rec.timing_us = optional_from<std::int64_t>(j, "timing_us");
}

std::string csv_header() { return "r,c,dimension,verdict,witness_k,witness_index,clause,crosscheck"; }

std::string to_csv_row(const ReportRecord& rec) {
  std::ostringstream os;
  os << rec.r << ',' << (rec.c ? std::to_string(*rec.c) : "") << ',' << rec.dimension << ','
     << rec.verdict << ',' << (rec.witness ? std::to_string(rec.witness->k) : "") << ','
     << (rec.witness ? std::to_string(rec.witness->ratio_index) : "") << ','
     << (rec.clause ? std::to_string(*rec.clause) : "") << ',' << rec.crosscheck;
  return os.str();
}

std::string to_text(const ReportRecord& rec) {
  std::ostringstream os;
  os << rec.command << ": r=" << rec.r;
  if (rec.c) os << " c=" << *rec.c;
  os << " p=" << rec.p;
  if (rec.g) os << " g=" << *rec.g;
  os << " dimension=" << rec.dimension << '\n';
  os << "  verdict:     " << rec.verdict << (rec.dimension_zero ? " (vacuous, empty basis)" : "")
     << (rec.experimental ? " [experimental]" : "") << '\n';
  os << "  provenance:  " << rec.provenance << '\n';
  os << "  clause:      " << (rec.clause ? std::to_string(*rec.clause) : "none") << '\n';
  os << "  crosscheck:  " << rec.crosscheck << '\n';
  if (rec.witness) {
    os << "  witness:     k=" << rec.witness->k << " ratio " << rec.witness->ratio_id << " = "
       << rec.witness->ratio_text << " is negative\n";
  } else {
    os << "  witness:     none\n";
  }
  if (rec.documented_witness) {
    const auto& d = rec.documented_witness.value();
    os << "  closed-form witness: k=" << d.k << " ratio " << d.ratio_id << " = " << d.ratio_text
       << " sign " << d.sign << (d.confirmed ? " (confirmed)" : " (NOT confirmed)") << '\n';
  }
  for (const auto& n : rec.notes) os << "  note:        " << n << '\n';
  if (rec.timing_us) os << "  timing:      " << *rec.timing_us << " us\n";
  return os.str();
}

}  // namespace rtfin::cli
