#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scriptbridge/normalize.hpp"
#include "scriptbridge/script_parser.hpp"
#include "scriptbridge/subtitle.hpp"

namespace scriptbridge::ir {

using normalize::Term;

// Sparse non-negative term weights; zero weights are never stored.
struct TermVector {
  std::map<Term, double> weights;

  void set(const Term& term, double weight);  // drops zeros
  double norm() const;                        // Euclidean, summed in term order
  bool empty() const { return weights.empty(); }
};

enum class Weighting { TfIdf, Boolean };

struct InvertedIndex {
  int doc_count = 0;
  // term -> (utterance_id, raw term frequency), ids ascending
  std::map<Term, std::vector<std::pair<int, int>>> postings;
  std::map<int, TermVector> doc_vectors;
  std::map<int, double> doc_norms;
  Weighting weighting = Weighting::TfIdf;
};

struct MatchCandidate {
  int utterance_id = 0;
  double score = 0.0;  // cosine, in [0, 1]
};

struct MatchState {
  std::optional<int> last_matched_id;
  int window_radius = 20;  // W, >= 1
};

enum class MatchMethod { Direct, Voted, NoMatch };

struct MatchDecision {
  int line_id = 0;
  std::optional<MatchCandidate> result;  // absent iff method == NoMatch
  MatchMethod method = MatchMethod::NoMatch;
};

struct MatchConfig {
  double threshold = 0.3;
  int window_radius = 20;
  Weighting weighting = Weighting::TfIdf;
  normalize::AbbrevSet abbreviations = normalize::default_abbreviations();
};

// Raw occurrence count of term in doc_terms.
int tf(const Term& term, const std::vector<Term>& doc_terms);

// ln(doc_count / document frequency); 0 when the term indexes no document.
double idf(const Term& term, const InvertedIndex& index);

// tf * idf per distinct term (or 0/1 presence of indexed terms in Boolean
// mode); zero-weight terms omitted.
TermVector weigh(const std::vector<Term>& doc_terms, const InvertedIndex& index);

// Dot product over the product of Euclidean norms; 0 when either is empty.
double cosine(const TermVector& v1, const TermVector& v2);

// Sentence-splits then tokenizes an utterance into its index terms.
std::vector<Term> utterance_terms(const std::string& text,
                                  const normalize::AbbrevSet& abbreviations =
                                      normalize::default_abbreviations());

// Documents are utterance token lists; ids are their positions. Throws
// EmptyCollection when no document yields a term.
InvertedIndex build_index(const std::vector<std::vector<Term>>& docs,
                          Weighting weighting = Weighting::TfIdf);
InvertedIndex build_index(const std::vector<script::ScriptUtterance>& utterances,
                          Weighting weighting = Weighting::TfIdf,
                          const normalize::AbbrevSet& abbreviations =
                              normalize::default_abbreviations());

// 1-best over documents sharing at least one term with the query, restricted
// to [last_matched_id - W, last_matched_id + W] when the state has a match.
// Returns the argmax when its score reaches the threshold. Equal top scores
// prefer the id closest to last_matched_id + 1 (smallest id with no state).
std::optional<MatchCandidate> search(const InvertedIndex& index,
                                     const std::vector<Term>& query_terms,
                                     const MatchState& state, double threshold);
std::optional<MatchCandidate> search_vector(const InvertedIndex& index,
                                            const TermVector& query,
                                            const MatchState& state, double threshold);

struct VoteOutcome {
  std::optional<MatchCandidate> best;
  int subqueries = 0;
};

// Splits the sentence into sub-queries, 1-best each, then elects by vote
// count; ties by summed score, then by the proximity rule. The winner's
// score is its best sub-query score.
VoteOutcome subquery_vote(const InvertedIndex& index, const std::string& sentence,
                          const MatchState& state, double threshold,
                          const normalize::AbbrevSet& abbreviations =
                              normalize::default_abbreviations());

// Sequential matching of a subtitle against one script index: one shared
// window state, advanced only on hits.
std::vector<MatchDecision> match_document(const InvertedIndex& index,
                                          const std::vector<subtitle::ParallelLine>& lines,
                                          const MatchConfig& cfg = {});

// Tab-separated decision lines: line_id, utterance_id or -, score or -, method.
std::string decisions_to_tsv(const std::vector<MatchDecision>& decisions);
std::vector<MatchDecision> decisions_from_tsv(std::string_view text);

}  // namespace scriptbridge::ir
