#ifndef CANTUS_PHONOLOGY_HPP_
#define CANTUS_PHONOLOGY_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cantus/errors.hpp"

namespace cantus {

// End-rhyme class under the target language's rhyme scheme. Index 0 is the
// explicit "no rhyme constraint" class; 1..14 are the scheme classes; Unknown
// marks text the profile's tables cannot classify. Classification of real
// text never yields the null class, only explicit nullification does.
class RhymeClass {
 public:
  static constexpr int kNumSchemeClasses = 14;

  static RhymeClass null() { return RhymeClass(0); }
  static RhymeClass scheme(int index);
  static RhymeClass unknown() { return RhymeClass(-1); }
  static RhymeClass from_storage(int value);  // -1 | 0..14

  RhymeClass() : value_(0) {}

  bool is_null() const { return value_ == 0; }
  bool is_unknown() const { return value_ < 0; }
  bool is_scheme() const { return value_ > 0; }

  // Scheme index in 0..14; unknown has no index.
  int index() const;
  int storage() const { return value_; }

  friend bool operator==(RhymeClass a, RhymeClass b) { return a.value_ == b.value_; }
  friend bool operator!=(RhymeClass a, RhymeClass b) { return a.value_ != b.value_; }

 private:
  explicit RhymeClass(int value) : value_(value) {}
  int value_;
};

// Probability mass over the 14 rhyme classes. probs[0] holds null-class mass
// (zero except for distributions that explicitly include it); residual holds
// mass that belongs to no scheme class (unknown finals, special tokens).
struct RhymeDistribution {
  std::array<double, RhymeClass::kNumSchemeClasses + 1> probs{};
  double residual = 0.0;

  double total() const;
};

enum class SyllableRule {
  HanCharacters,   // one syllable per Han character; anything else is an error
  EnglishWords,    // dictionary lookup with vowel-group fallback, per word
  Codepoints,      // one syllable per codepoint; test/degenerate profiles
};

// Immutable per-language tables driving counting, segmentation and rhyme
// classification. Loaded once from a versioned profile file and shared
// freely across threads.
class LanguageProfile {
 public:
  static LanguageProfile load(const std::filesystem::path& path);
  static LanguageProfile parse(std::string_view contents);

  const std::string& id() const { return id_; }
  SyllableRule syllable_rule() const { return rule_; }

  // Strips symbols and whitespace and applies the traditional->simplified
  // map. The EnglishWords rule keeps single spaces between words.
  std::string normalize(std::string_view text) const;

  bool has_final(const std::string& final) const;
  RhymeClass final_class(const std::string& final) const;  // Unknown if absent
  RhymeClass char_class(const std::string& character) const;

  const std::unordered_set<std::string>& lexicon() const { return lexicon_; }
  std::size_t max_lexicon_codepoints() const { return max_word_cps_; }

  int dictionary_syllables(const std::string& lower_word) const;  // 0 if absent

  const std::unordered_map<std::string, int>& final_table() const {
    return final_to_class_;
  }
  const std::unordered_map<std::string, std::string>& char_table() const {
    return char_to_final_;
  }

  // Test hook: profiles can be assembled in code.
  struct Tables {
    std::string id;
    SyllableRule rule = SyllableRule::Codepoints;
    std::unordered_map<std::string, int> final_to_class;
    std::unordered_map<std::string, std::string> char_to_final;
    std::unordered_set<std::string> lexicon;
    std::unordered_map<std::string, int> syllable_dict;
    std::unordered_map<std::string, std::string> trad_to_simp;
  };
  static LanguageProfile from_tables(Tables tables);

 private:
  LanguageProfile() = default;
  void validate() const;

  std::string id_;
  SyllableRule rule_ = SyllableRule::Codepoints;
  std::unordered_map<std::string, int> final_to_class_;
  std::unordered_map<std::string, std::string> char_to_final_;
  std::unordered_set<std::string> lexicon_;
  std::size_t max_word_cps_ = 0;
  std::unordered_map<std::string, int> syllable_dict_;
  std::unordered_map<std::string, std::string> trad_to_simp_;
};

// Word segmentation of one sentence, with the syllable structure needed for
// boundary constraints: word_boundary_positions are the prefix sums of
// syllables_per_token, excluding the sentence-final total.
struct SyllabifiedSentence {
  std::vector<std::string> tokens;
  std::vector<int> syllables_per_token;
  int total_syllables = 0;
  std::set<int> word_boundary_positions;
};

int count_syllables(std::string_view text, const LanguageProfile& profile);
RhymeClass classify_rhyme(std::string_view word, const LanguageProfile& profile);
SyllabifiedSentence segment_words(std::string_view text, const LanguageProfile& profile);

// Empirical distribution of end-word rhyme classes over corpus lines.
// Unclassifiable lines are excluded from the denominator.
RhymeDistribution rhyme_prior(const std::vector<std::string>& corpus,
                              const LanguageProfile& profile);

// Tokenization used by sequence models: one token per codepoint for
// character-level profiles, whitespace words for EnglishWords.
std::vector<std::string> model_tokens(std::string_view text,
                                      const LanguageProfile& profile);

}  // namespace cantus

#endif  // CANTUS_PHONOLOGY_HPP_
