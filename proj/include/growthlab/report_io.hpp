#pragma once

// JSON and CSV forms of every report. Field order is fixed, so equal reports
// serialize to equal bytes.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "growthlab/graphs.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/spectral.hpp"

namespace growthlab {

using Json = nlohmann::ordered_json;

/// {"kind": ..., "key": "<decimal>", "entries": [...]}.
Json element_json(const Group& group, Key g);
Json set_json(const ElementSet& a, std::size_t max_listed = 64);

Json to_json(const Inequality& x);
Json to_json(const Verdict& v);
Json to_json(const DiameterReport& r);
Json to_json(const GammaReport& r);
Json to_json(const GrowthReport& r);
Json to_json(const SpectrumReport& r);
Json to_json(const IterativeEstimate& e);
Json to_json(const MixingReport& r);
Json to_json(const ScanRow& r);
Json to_json(const KonyaginReport& r);
Json to_json(const PivotReport& r);
Json to_json(const SumProductReport& r);
Json to_json(const SliceProfile& r, const Group& group);
Json to_json(const EscapeResult& r, const Group& group);
Json to_json(const PyberSpigaReport& r);
Json to_json(const NikolovPyberReport& r);
Json to_json(const MultiplicityVerdict& v);
Json to_json(const HimultVerdict& v);
Json to_json(const TraceIdentity& t);
Json to_json(const ExpansionReport& r);
Json to_json(const CheegerCheck& c);
Json to_json(const NonexpansionWitness& w);

/// Rows of strings under a header; written RFC 4180 style.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& table);
/// Shortest round-trip form, "nan"/"inf" spelled out.
std::string format_double(double v);

Table to_table(const DiameterReport& r);
Table to_table(const GrowthReport& r);
Table to_table(const SpectrumReport& r);
Table to_table(const MixingReport& r);
Table to_table(const std::vector<ScanRow>& rows);
Table to_table(const KonyaginReport& r);
Table to_table(const SliceProfile& r);
Table to_table(const EscapeResult& r);
Table to_table(const Verdict& v);

}  // namespace growthlab
