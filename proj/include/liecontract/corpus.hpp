#pragma once

#include <string>
#include <vector>

#include "liecontract/algebra.hpp"
#include "liecontract/contraction.hpp"

namespace liecontract {

/// A named algebra with contractions whose results are known corpus members.
struct CorpusEntry {
  struct KnownContraction {
    std::string label;
    ContractionSpec spec;
    std::string expected;  // corpus name of the contracted algebra
  };
  std::string name;
  StructureConstants algebra;
  std::vector<KnownContraction> known_contractions;
};

namespace corpusdetail {

inline Signature sig(std::initializer_list<int> v) {
  Signature s;
  for (int x : v) s.exponents.push_back(Rat(x));
  return s;
}

inline ContractionSpec diag_spec(Signature s) {
  ContractionSpec spec;
  spec.family = std::move(s);
  return spec;
}

inline std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> corpus;

  for (int n = 2; n <= 4; ++n) {
    CorpusEntry e;
    e.name = "abelian" + std::to_string(n);
    e.algebra = StructureConstants(n);
    Signature zero;
    zero.exponents.assign(n, Rat(0));
    e.known_contractions.push_back(
        {"improper_zero", diag_spec(zero), e.name});
    corpus.push_back(std::move(e));
  }

  {
    // Heisenberg algebra: [e1,e2] = e3.
    CorpusEntry e;
    e.name = "h3";
    e.algebra = StructureConstants(3);
    e.algebra.set(1, 2, 3, Rat(1));
    e.known_contractions.push_back(
        {"trivial", diag_spec(sig({1, 1, 1})), "abelian3"});
    e.known_contractions.push_back(
        {"improper", diag_spec(sig({1, 1, 2})), "h3"});
    ContractionSpec scaled = diag_spec(sig({1, 1, 2}));
    scaled.A = RationalMatrix(3);
    scaled.A.at(0, 0) = 1;
    scaled.A.at(1, 1) = 1;
    scaled.A.at(2, 2) = 2;
    scaled.P = RationalMatrix(3);
    scaled.P.at(0, 0) = 1;
    scaled.P.at(1, 1) = 1;
    scaled.P.at(2, 2) = Rat(1, 2);
    e.known_contractions.push_back({"improper_factored", scaled, "h3"});
    corpus.push_back(std::move(e));
  }

  {
    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
    CorpusEntry e;
    e.name = "so3";
    e.algebra = StructureConstants(3);
    e.algebra.set(1, 2, 3, Rat(1));
    e.algebra.set(2, 3, 1, Rat(1));
    e.algebra.set(3, 1, 2, Rat(1));
    e.known_contractions.push_back(
        {"to_heisenberg", diag_spec(sig({1, 1, 2})), "h3"});
    e.known_contractions.push_back(
        {"trivial", diag_spec(sig({1, 1, 1})), "abelian3"});
    corpus.push_back(std::move(e));
  }

  {
    // Filiform nilpotent: [e1,e2] = e3, [e1,e3] = e4.
    CorpusEntry e;
    e.name = "n4";
    e.algebra = StructureConstants(4);
    e.algebra.set(1, 2, 3, Rat(1));
    e.algebra.set(1, 3, 4, Rat(1));
    e.known_contractions.push_back(
        {"improper", diag_spec(sig({1, 1, 2, 3})), "n4"});
    e.known_contractions.push_back(
        {"to_h3_line", diag_spec(sig({1, 1, 2, 0})), "h3_line"});
    e.known_contractions.push_back(
        {"trivial", diag_spec(sig({1, 1, 1, 1})), "abelian4"});
    corpus.push_back(std::move(e));
  }

  {
    // h3 + a central line: [e1,e2] = e3 in dimension 4.
    CorpusEntry e;
    e.name = "h3_line";
    e.algebra = StructureConstants(4);
    e.algebra.set(1, 2, 3, Rat(1));
    e.known_contractions.push_back(
        {"trivial", diag_spec(sig({1, 1, 1, 0})), "abelian4"});
    corpus.push_back(std::move(e));
  }

  return corpus;
}

}  // namespace corpusdetail

inline const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = corpusdetail::make_corpus();
  return corpus;
}

inline const CorpusEntry* corpus_find(const std::string& name) {
  for (const CorpusEntry& e : builtin_corpus())
    if (e.name == name) return &e;
  return nullptr;
}

/// One re-derived contraction: pass iff the entry validates, the expected
/// name resolves, and the contraction reproduces that algebra exactly.
struct CorpusRunRow {
  std::string algebra;
  std::string label;
  std::string expected;
  bool pass;
};

inline std::vector<CorpusRunRow> run_corpus(
    const std::vector<CorpusEntry>& entries, const std::string& filter = "") {
  auto find = [&](const std::string& name) -> const CorpusEntry* {
    for (const CorpusEntry& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  };
  std::vector<CorpusRunRow> rows;
  for (const CorpusEntry& entry : entries) {
    if (!filter.empty() && entry.name.find(filter) == std::string::npos)
      continue;
    bool entry_valid = validate_algebra(entry.algebra).ok();
    for (const auto& known : entry.known_contractions) {
      const CorpusEntry* expected = find(known.expected);
      bool pass = entry_valid && expected != nullptr &&
                  contract_full(entry.algebra, known.spec) == expected->algebra;
      rows.push_back({entry.name, known.label, known.expected, pass});
    }
  }
  return rows;
}

}  // namespace liecontract
