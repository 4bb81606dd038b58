#pragma once

#include <string>

#include "backstable/gkm.hpp"
#include "backstable/homology.hpp"
#include "backstable/pipedream.hpp"
#include "backstable/schubert.hpp"

namespace backstable {

// "base:v1,v2,..." one-line form, "s:i1,i2,..." word form, or "id"
Perm parse_perm(const std::string& text);
std::string perm_text(const Perm& w);

// comma list "4,3,1"; empty string is the empty partition
Partition parse_partition(const std::string& text);
std::string partition_text(const Partition& la);

std::string poly_json(const Poly& f);
Poly parse_poly_json(const std::string& text);

std::string symfunc_json(const SymFunc& f);
SymFunc parse_symfunc_json(const std::string& text);

std::string doublesym_json(const DoubleSymFunc& f);
DoubleSymFunc parse_doublesym_json(const std::string& text);

std::string rep_json(const BackStableRep& rep);
BackStableRep parse_rep_json(const std::string& text);
std::string double_rep_json(const DoubleBackStableRep& rep);
DoubleBackStableRep parse_double_rep_json(const std::string& text);

std::string dual_series_json(const DualSeries& f);
DualSeries parse_dual_series_json(const std::string& text);

std::string pipedream_json(const BumplessPipedream& d);
BumplessPipedream parse_pipedream_json(const std::string& text);

std::string localized_class_json(const LocalizedClass& c);
LocalizedClass parse_localized_class_json(const std::string& text);
std::string localized_class_csv(const LocalizedClass& c);

std::string nilhecke_json(const NilHeckeElement& x);
NilHeckeElement parse_nilhecke_json(const std::string& text);

}  // namespace backstable
