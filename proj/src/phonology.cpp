#include "cantus/phonology.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cantus/text.hpp"

namespace cantus {

RhymeClass RhymeClass::scheme(int index) {
  if (index < 1 || index > kNumSchemeClasses) {
    throw Error(ErrorKind::InvalidArgument,
                "rhyme scheme index out of range: " + std::to_string(index));
  }
  return RhymeClass(index);
}

RhymeClass RhymeClass::from_storage(int value) {
  if (value < -1 || value > kNumSchemeClasses) {
    throw Error(ErrorKind::InvalidArgument,
                "rhyme storage value out of range: " + std::to_string(value));
  }
  return RhymeClass(value);
}

int RhymeClass::index() const {
  if (is_unknown()) {
    throw Error(ErrorKind::InvalidArgument, "unknown rhyme class has no index");
  }
  return value_;
}

double RhymeDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0) + residual;
}

// ---------------------------------------------------------------------------
// Profile loading
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kProfileMagic = "cantus-profile";
constexpr std::string_view kProfileVersion = "v1";

SyllableRule parse_rule(const std::string& word) {
  if (word == "han") return SyllableRule::HanCharacters;
  if (word == "english") return SyllableRule::EnglishWords;
  if (word == "codepoint") return SyllableRule::Codepoints;
  throw Error(ErrorKind::MalformedDocument, "unknown syllable rule: " + word);
}

}  // namespace

LanguageProfile LanguageProfile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open profile: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

LanguageProfile LanguageProfile::parse(std::string_view contents) {
  LanguageProfile p;
  std::istringstream in{std::string(contents)};
  std::string line;

  if (!std::getline(in, line)) {
    throw Error(ErrorKind::MalformedDocument, "empty profile file");
  }
  {
    std::istringstream header(line);
    std::string magic, version;
    header >> magic >> version;
    if (magic != kProfileMagic) {
      throw Error(ErrorKind::MalformedDocument, "not a profile file");
    }
    if (version != kProfileVersion) {
      throw Error(ErrorKind::VersionMismatch,
                  "unsupported profile version: " + version);
    }
  }

  std::string section;
  bool saw_id = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    std::istringstream fields(line);
    if (section.empty()) {
      std::string key, value;
      fields >> key >> value;
      if (key == "id") {
        p.id_ = value;
        saw_id = true;
      } else if (key == "syllables") {
        p.rule_ = parse_rule(value);
      } else {
        throw Error(ErrorKind::MalformedDocument, "unknown header key: " + key);
      }
    } else if (section == "finals") {
      int cls = 0;
      fields >> cls;
      if (!fields || cls < 1 || cls > RhymeClass::kNumSchemeClasses) {
        throw Error(ErrorKind::MalformedDocument, "bad finals line: " + line);
      }
      std::string final;
      while (fields >> final) {
        if (p.final_to_class_.count(final)) {
          throw Error(ErrorKind::InvalidProfile,
                      "final assigned to two classes: " + final);
        }
        p.final_to_class_[final] = cls;
      }
    } else if (section == "chars") {
      std::string ch, final;
      fields >> ch >> final;
      if (ch.empty() || final.empty()) {
        throw Error(ErrorKind::MalformedDocument, "bad chars line: " + line);
      }
      p.char_to_final_[ch] = final;
    } else if (section == "lexicon") {
      std::string word;
      fields >> word;
      if (!word.empty()) p.lexicon_.insert(word);
    } else if (section == "sylldict") {
      std::string word;
      int n = 0;
      fields >> word >> n;
      if (word.empty() || n < 1) {
        throw Error(ErrorKind::MalformedDocument, "bad sylldict line: " + line);
      }
      p.syllable_dict_[to_lower_ascii(word)] = n;
    } else if (section == "normalize") {
      std::string trad, simp;
      fields >> trad >> simp;
      if (trad.empty() || simp.empty()) {
        throw Error(ErrorKind::MalformedDocument, "bad normalize line: " + line);
      }
      p.trad_to_simp_[trad] = simp;
    } else {
      throw Error(ErrorKind::MalformedDocument, "unknown section: " + section);
    }
  }
  if (!saw_id) {
    throw Error(ErrorKind::MalformedDocument, "profile missing id");
  }
  for (const auto& word : p.lexicon_) {
    p.max_word_cps_ = std::max(p.max_word_cps_, decode_utf8(word).size());
  }
  p.validate();
  return p;
}

LanguageProfile LanguageProfile::from_tables(Tables tables) {
  LanguageProfile p;
  p.id_ = std::move(tables.id);
  p.rule_ = tables.rule;
  p.final_to_class_ = std::move(tables.final_to_class);
  p.char_to_final_ = std::move(tables.char_to_final);
  p.lexicon_ = std::move(tables.lexicon);
  p.syllable_dict_ = std::move(tables.syllable_dict);
  p.trad_to_simp_ = std::move(tables.trad_to_simp);
  for (const auto& word : p.lexicon_) {
    p.max_word_cps_ = std::max(p.max_word_cps_, decode_utf8(word).size());
  }
  p.validate();
  return p;
}

void LanguageProfile::validate() const {
  // Every final reachable from the character table must be classified;
  // otherwise real text would silently fall into the null class.
  for (const auto& [ch, final] : char_to_final_) {
    if (!final_to_class_.count(final)) {
      throw Error(ErrorKind::InvalidProfile,
                  "final of '" + ch + "' (" + final + ") missing from finals table");
    }
  }
}

std::string LanguageProfile::normalize(std::string_view text) const {
  const bool keep_spaces = rule_ == SyllableRule::EnglishWords;
  std::string out;
  bool pending_space = false;
  bool emitted = false;
  for (char32_t cp : decode_utf8(text)) {
    if (is_ascii_space(cp) || cp == 0x3000) {
      if (keep_spaces && emitted) pending_space = true;
      continue;
    }
    if (is_symbol(cp) || cp == 0xFFFD) continue;
    std::string piece = encode_utf8(cp);
    if (auto it = trad_to_simp_.find(piece); it != trad_to_simp_.end()) {
      piece = it->second;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += piece;
    emitted = true;
  }
  return out;
}

bool LanguageProfile::has_final(const std::string& final) const {
  return final_to_class_.count(final) > 0;
}

RhymeClass LanguageProfile::final_class(const std::string& final) const {
  auto it = final_to_class_.find(final);
  if (it == final_to_class_.end()) return RhymeClass::unknown();
  return RhymeClass::scheme(it->second);
}

RhymeClass LanguageProfile::char_class(const std::string& character) const {
  auto it = char_to_final_.find(character);
  if (it == char_to_final_.end()) return RhymeClass::unknown();
  return final_class(it->second);
}

int LanguageProfile::dictionary_syllables(const std::string& lower_word) const {
  auto it = syllable_dict_.find(lower_word);
  return it == syllable_dict_.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Counting, classification, segmentation
// ---------------------------------------------------------------------------

namespace {

bool is_ascii_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// Vowel-group count with the usual silent-e adjustment. Used when the word
// is not in the profile dictionary.
int heuristic_english_syllables(const std::string& word) {
  std::string w = to_lower_ascii(word);
  std::string letters;
  for (char c : w) {
    if (c >= 'a' && c <= 'z') letters += c;
  }
  if (letters.empty()) return 0;
  int groups = 0;
  bool in_group = false;
  for (char c : letters) {
    if (is_ascii_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  const std::size_t n = letters.size();
  if (groups > 1 && n >= 2 && letters[n - 1] == 'e' &&
      !is_ascii_vowel(letters[n - 2]) &&
      !(n >= 3 && letters[n - 2] == 'l' && !is_ascii_vowel(letters[n - 3]))) {
    --groups;
  }
  return std::max(groups, 0);
}

int word_syllables(const std::string& word, const LanguageProfile& profile) {
  switch (profile.syllable_rule()) {
    case SyllableRule::HanCharacters: {
      int n = 0;
      for (char32_t cp : decode_utf8(word)) {
        if (!is_han(cp)) {
          throw Error(ErrorKind::UnpronounceableToken,
                      "non-Han character in '" + word + "'");
        }
        ++n;
      }
      return n;
    }
    case SyllableRule::EnglishWords: {
      if (int n = profile.dictionary_syllables(to_lower_ascii(word)); n > 0) {
        return n;
      }
      int n = heuristic_english_syllables(word);
      if (n == 0) {
        throw Error(ErrorKind::UnpronounceableToken,
                    "no syllabification for '" + word + "'");
      }
      return n;
    }
    case SyllableRule::Codepoints:
      return static_cast<int>(decode_utf8(word).size());
  }
  return 0;
}

std::vector<std::string> segment_tokens(const std::string& normalized,
                                        const LanguageProfile& profile) {
  if (profile.syllable_rule() == SyllableRule::EnglishWords) {
    return split_whitespace(normalized);
  }
  // Maximum forward matching over the lexicon; unmatched codepoints become
  // single-character words.
  const std::vector<std::string> cps = codepoint_strings(normalized);
  const std::size_t max_len = std::max<std::size_t>(profile.max_lexicon_codepoints(), 1);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    std::size_t best = 1;
    std::string best_word = cps[i];
    std::string candidate;
    const std::size_t limit = std::min(max_len, cps.size() - i);
    candidate.reserve(limit * 3);
    for (std::size_t len = 1; len <= limit; ++len) {
      candidate += cps[i + len - 1];
      if (len >= 2 && profile.lexicon().count(candidate)) {
        best = len;
        best_word = candidate;
      }
    }
    tokens.push_back(best_word);
    i += best;
  }
  return tokens;
}

}  // namespace

int count_syllables(std::string_view text, const LanguageProfile& profile) {
  const std::string normalized = profile.normalize(text);
  if (normalized.empty()) {
    throw Error(ErrorKind::EmptyInput, "no pronounceable text after normalization");
  }
  int total = 0;
  if (profile.syllable_rule() == SyllableRule::EnglishWords) {
    for (const auto& word : split_whitespace(normalized)) {
      total += word_syllables(word, profile);
    }
  } else {
    total = word_syllables(normalized, profile);
  }
  return total;
}

RhymeClass classify_rhyme(std::string_view word, const LanguageProfile& profile) {
  const std::string normalized = profile.normalize(word);
  if (normalized.empty()) {
    throw Error(ErrorKind::EmptyInput, "no text to classify after normalization");
  }
  // Classification is by the final syllable. With a character-indexed table
  // that is the last codepoint; multi-character pronunciations are out of
  // scope for the primary tables.
  const std::vector<std::string> cps = codepoint_strings(normalized);
  return profile.char_class(cps.back());
}

SyllabifiedSentence segment_words(std::string_view text,
                                  const LanguageProfile& profile) {
  const std::string normalized = profile.normalize(text);
  if (normalized.empty()) {
    throw Error(ErrorKind::EmptyInput, "no text to segment after normalization");
  }
  SyllabifiedSentence out;
  out.tokens = segment_tokens(normalized, profile);
  out.syllables_per_token.reserve(out.tokens.size());
  for (const auto& token : out.tokens) {
    const int n = word_syllables(token, profile);
    out.syllables_per_token.push_back(n);
    out.total_syllables += n;
  }
  int prefix = 0;
  for (std::size_t i = 0; i + 1 < out.tokens.size(); ++i) {
    prefix += out.syllables_per_token[i];
    out.word_boundary_positions.insert(prefix);
  }
  return out;
}

RhymeDistribution rhyme_prior(const std::vector<std::string>& corpus,
                              const LanguageProfile& profile) {
  std::array<std::size_t, RhymeClass::kNumSchemeClasses + 1> counts{};
  std::size_t classified = 0;
  for (const auto& line : corpus) {
    RhymeClass cls = RhymeClass::unknown();
    try {
      cls = classify_rhyme(line, profile);
    } catch (const Error&) {
      continue;  // unnormalizable line: not classifiable
    }
    if (cls.is_unknown()) continue;
    counts[static_cast<std::size_t>(cls.index())] += 1;
    ++classified;
  }
  if (classified == 0) {
    throw Error(ErrorKind::NoClassifiableLines,
                "no line has a classifiable end word");
  }
  RhymeDistribution dist;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    dist.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(classified);
  }
  return dist;
}

std::vector<std::string> model_tokens(std::string_view text,
                                      const LanguageProfile& profile) {
  const std::string normalized = profile.normalize(text);
  if (profile.syllable_rule() == SyllableRule::EnglishWords) {
    return split_whitespace(normalized);
  }
  return codepoint_strings(normalized);
}

}  // namespace cantus
