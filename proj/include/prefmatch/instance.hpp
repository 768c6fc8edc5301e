#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "prefmatch/errors.hpp"

namespace prefmatch {

/// One-sided preference instance: applicants rank a subset of the posts in a
/// strict order. Applicants and posts are 0-based internally; file I/O uses
/// the 1-based ids of the text format.
class Instance {
  public:
    Instance(int n_applicants, int n_posts, std::vector<std::vector<int>> prefs);

    int n_applicants() const { return n_applicants_; }
    int n_posts() const { return n_posts_; }

    /// prefs()[a][k] is applicant a's rank-(k+1) post.
    const std::vector<std::vector<int>>& prefs() const { return prefs_; }
    const std::vector<int>& pref_list(int applicant) const { return prefs_[applicant]; }

    /// Largest rank in any list (0 when all lists are empty).
    int max_rank() const { return max_rank_; }
    /// Total number of (applicant, post) edges.
    std::int64_t edge_count() const { return edge_count_; }

    /// 1-based rank of post for applicant, or 0 if the post is not listed.
    int rank_of(int applicant, int post) const;
    bool has_edge(int applicant, int post) const { return rank_of(applicant, post) > 0; }

  private:
    int n_applicants_;
    int n_posts_;
    int max_rank_;
    std::int64_t edge_count_;
    std::vector<std::vector<int>> prefs_;
};

/// Dense rank lookup for one instance: O(1) rank_of at the cost of
/// n_applicants * n_posts ints. Built where hot loops need it.
class RankIndex {
  public:
    explicit RankIndex(const Instance& inst);

    /// 1-based rank, or 0 if (applicant, post) is not an edge.
    int rank_of(int applicant, int post) const {
        return table_[static_cast<std::size_t>(applicant) * n_posts_ + post];
    }

  private:
    int n_posts_;
    std::vector<int> table_;
};

/// A set of applicant-post pairs, at most one per applicant and per post.
/// Stored sorted by applicant. Membership of every pair in a particular
/// instance's edge set is checked by validate_matching, not here.
class Matching {
  public:
    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }

    /// Post matched to applicant, or -1.
    int post_of(int applicant) const;

    /// applicant -> post (or -1) lookup vector of length n_applicants.
    std::vector<int> assignment(int n_applicants) const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.pairs_ == b.pairs_; }

  private:
    std::vector<std::pair<int, int>> pairs_;
};

/// Throws ValidationError unless every pair of m is an edge of inst.
void validate_matching(const Instance& inst, const Matching& m);

/// Matched-applicant counts per rank (index 0 = rank 1), padded to the
/// instance's max rank, plus the number of unmatched applicants.
struct Signature {
    std::vector<std::int64_t> per_rank;
    std::int64_t unmatched = 0;

    std::int64_t total() const;
    std::string to_string() const;

    friend bool operator==(const Signature& a, const Signature& b) = default;
};

/// Signature of m with respect to inst. Throws ValidationError if some pair
/// of m is not an edge.
Signature signature_of(const Instance& inst, const Matching& m);

/// Rank-maximality order: scan ranks 1..r, first difference decides, larger
/// count wins. The unmatched count is not part of the scan. Both signatures
/// must have equal per_rank length.
std::strong_ordering compare_rank_maximal(const Signature& a, const Signature& b);

/// Fairness order: scan from the unmatched slot down to rank 1, first
/// difference decides, smaller count wins.
std::strong_ordering compare_fair(const Signature& a, const Signature& b);

/// Instance text format:
///   line 1: "<n_applicants> <n_posts>"
///   then one line per applicant: "<applicant_id>: <post_id> <post_id> ..."
/// Ids are 1-based; list order is preference order; '#' starts a comment;
/// blank lines are ignored. Every applicant id must appear exactly once.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
std::string serialize_instance(const Instance& inst);

/// Matching text format: one "<applicant_id> <post_id>" pair per line,
/// comments and blank lines as above. Validated against the instance.
Matching parse_matching(const Instance& inst, std::istream& in);
Matching parse_matching_text(const Instance& inst, const std::string& text);
std::string serialize_matching(const Matching& m);

}  // namespace prefmatch
