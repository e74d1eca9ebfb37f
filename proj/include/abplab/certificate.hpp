#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace abplab {

/// One inequality link lhs <= rhs + slack of a proof trace.
struct CertificateLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::string note;
};

CertificateLink make_link(std::string name, double lhs, double rhs, double slack, std::string note = {});

struct Certificate {
  std::string title;
  std::vector<CertificateLink> links;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  bool halted = false;
  std::string halt_reason;

  void add(CertificateLink link) { links.push_back(std::move(link)); }
  bool all_pass() const;
  const CertificateLink* find(const std::string& name) const;
};

}  // namespace abplab
