#pragma once

#include <string>
#include <vector>

namespace hallskew {

struct SuiteItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;
  bool ok() const;
  std::string to_json() const;
};

struct SuiteOptions {
  bool full = false;  // full decomposition checks instead of sampling
};

// table1, lemma21, gcd, family, products, catalog
const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown name. Errors inside an item are
// reported as a failed item, not thrown.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace hallskew
