#pragma once

#include <string>
#include <vector>

namespace latrep {

struct CheckItem {
  std::string id;
  bool pass = false;
  std::string witness;  // nonempty when pass is false; may carry extra data otherwise
};

// structured pass/fail evidence for one claim checked on one instance
struct VerificationReport {
  std::string claim;
  std::string instance;
  bool pass = true;
  std::vector<CheckItem> items;

  void add(const std::string& id, bool ok, const std::string& witness = "") {
    items.push_back({id, ok, witness});
    pass = pass && ok;
  }
  void absorb(const VerificationReport& sub) {
    for (const auto& it : sub.items) items.push_back(it);
    pass = pass && sub.pass;
  }
  const CheckItem* find(const std::string& id) const {
    for (const auto& it : items)
      if (it.id == id) return &it;
    return nullptr;
  }
};

}  // namespace latrep
