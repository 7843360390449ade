#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scriptbridge/normalize.hpp"
#include "scriptbridge/projection.hpp"

namespace scriptbridge::lm {

using normalize::Term;

inline const Term kBegin = "<s>";
inline const Term kEnd = "</s>";
inline const Term kUnknown = "<unk>";

// Add-k n-gram model. Probabilities are smoothed relative frequencies over
// the event set (training vocabulary plus </s> and <unk>); a context never
// seen in training backs off to its longest seen suffix, down to unigrams.
class NGramModel {
 public:
  // Throws EmptyTraining unless at least one sentence is non-empty.
  static NGramModel train(const std::vector<std::vector<Term>>& sentences, int order,
                          double k);

  // Order-1 model assigning every event the probability 1 / |events|.
  static NGramModel uniform(const std::set<Term>& vocab);

  double prob(std::span<const Term> context, const Term& next) const;
  double log2_prob(std::span<const Term> context, const Term& next) const;

  // Log2 probability of the padded sentence; the end symbol is scored, the
  // begin padding is not. Returns the token count scored via out-param.
  double sentence_log2_prob(const std::vector<Term>& sentence, long& tokens) const;

  int order() const { return order_; }
  double smoothing_k() const { return k_; }
  const std::set<Term>& vocab() const { return vocab_; }
  // vocab plus </s> and <unk>: everything prob() can predict.
  const std::set<Term>& events() const { return events_; }

 private:
  NGramModel() = default;

  int order_ = 1;
  double k_ = 0.1;
  bool uniform_ = false;
  std::set<Term> vocab_;   // words seen in training
  std::set<Term> events_;  // vocab + sentinels
  // context (0..order-1 terms) -> next term -> count
  std::map<std::vector<Term>, std::map<Term, long>> counts_;
  std::map<std::vector<Term>, long> context_totals_;
};

// exp2 of the negative average log2 probability per token. Per-sentence
// log probabilities are summed in ascending order, so the result does not
// depend on sentence order.
double perplexity(const NGramModel& model, const std::vector<std::vector<Term>>& sentences);

struct SpeakerPartition {
  std::string attribute_name;
  std::map<std::string, std::string> mapping;  // speaker -> group label
  std::map<std::string, std::vector<std::vector<Term>>> groups;
};

// speaker<TAB>group rows; '#' and blank lines skipped.
std::map<std::string, std::string> load_attribute_map(std::string_view bytes);

// Target-side sentences of the corpus grouped by the speaker attribute.
// Unmapped and UNKNOWN speakers land in `unknown_group`.
SpeakerPartition partition_by_speaker(const projection::DialogueCorpus& corpus,
                                      const std::string& attribute_name,
                                      const std::map<std::string, std::string>& mapping,
                                      const std::string& unknown_group = "_unknown");

struct StudyConfig {
  int order = 3;
  double k = 0.1;
  double holdout_fraction = 0.1;
  std::uint64_t seed = 1;
  int min_sentences = 20;  // per group, after holdout
  std::string attribute_name = "group";
  // When false, sentences whose speaker has no mapping are left out of the
  // study instead of forming an extra group.
  bool include_unmapped = false;
  std::string unknown_group = "_unknown";
};

struct GroupResult {
  std::string group;
  long train_sentences = 0;
  long holdout_sentences = 0;
  double pooled_ppl = 0.0;
  double adapted_ppl = 0.0;
  double delta = 0.0;  // pooled - adapted; positive favors adaptation
};

struct StudyReport {
  std::string attribute_name;
  std::vector<GroupResult> groups;  // sorted by group label
  double mean_delta = 0.0;
  double total_delta = 0.0;
};

// Seeded per-group train/holdout split; one pooled model over all training
// sentences and one model per group, each evaluated on the group's holdout.
// Throws InsufficientData naming the first group below min_sentences (or
// when fewer than two groups remain).
StudyReport adaptation_study(const projection::DialogueCorpus& corpus,
                             const std::map<std::string, std::string>& attribute_map,
                             const StudyConfig& cfg = {});

std::string render_study(const StudyReport& report);

}  // namespace scriptbridge::lm
