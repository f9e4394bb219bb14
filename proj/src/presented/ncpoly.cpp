#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hgs/presented.hpp"

namespace hgs {

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

// "-1/2" -> ("1/2", true); compound values get parentheses
std::pair<std::string, bool> split_sign(const Scalar& c) {
  std::string s = c.to_string();
  bool neg = false;
  if (!s.empty() && s[0] == '-' && s.find_first_of("+-x", 1) == std::string::npos) {
    neg = true;
    s = s.substr(1);
  }
  if (s.find_first_of("+-x ", 0) != std::string::npos) s = "(" + s + ")";
  return {s, neg};
}

std::string term_string(const Scalar& c, const std::string& body, bool first) {
  auto [s, neg] = split_sign(c);
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (body.empty()) return out + s;
  if (s == "1") return out + body;
  return out + s + "*" + body;
}

bool contains_at(const Word& w, const Word& sub, std::size_t pos) {
  return pos + sub.size() <= w.size() && std::equal(sub.begin(), sub.end(), w.begin() + pos);
}

bool occurs_in(const Word& sub, const Word& w) {
  for (std::size_t p = 0; p + sub.size() <= w.size(); ++p)
    if (contains_at(w, sub, p)) return true;
  return false;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

using LeadIndex = std::unordered_map<Word, std::size_t, WordHash>;

std::optional<std::pair<std::size_t, std::size_t>> find_lead(const LeadIndex& index,
                                                             const std::vector<std::size_t>& lengths, const Word& w) {
  Word sub;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t len : lengths) {
      if (pos + len > w.size()) break;
      sub.assign(w.begin() + pos, w.begin() + pos + len);
      auto it = index.find(sub);
      if (it != index.end()) return std::make_pair(it->second, pos);
    }
  return std::nullopt;
}

NCPolynomial reduce_with(NCPolynomial work, const std::vector<RewriteRule>& rules, const LeadIndex& index,
                         const std::vector<std::size_t>& lengths) {
  NCPolynomial result(work.field());
  while (!work.is_zero()) {
    Word w = work.leading_word();
    Scalar c = work.leading_coeff();
    work.add_term(w, -c);
    auto hit = find_lead(index, lengths, w);
    if (!hit) {
      result.add_term(w, c);
      continue;
    }
    const RewriteRule& r = rules[hit->first];
    Word x(w.begin(), w.begin() + hit->second), y(w.begin() + hit->second + r.lead.size(), w.end());
    for (const auto& [tw, tc] : r.tail.terms()) work.add_term(concat(x, tw, y), c * tc);
  }
  return result;
}

std::string serialize(const NCPolynomial& p) {
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    out += c.to_string() + ":";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
    out += ";";
  }
  return out;
}

Word parse_word(const std::string& s) {
  Word w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) w.push_back(static_cast<Letter>(std::stoul(tok)));
  return w;
}

NCPolynomial parse_poly(Field f, const std::string& s) {
  NCPolynomial p(f);
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, ';')) {
    if (term.empty()) continue;
    auto colon = term.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad cached term");
    p.add_term(parse_word(term.substr(colon + 1)), f.parse_element(term.substr(0, colon)));
  }
  return p;
}

std::string rule_line(const RewriteRule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.lead.size(); ++i) out += (i ? "," : "") + std::to_string(r.lead[i]);
  return out + "|" + serialize(r.tail);
}

std::vector<std::size_t> lead_lengths(const LeadIndex& index) {
  std::vector<std::size_t> out;
  for (const auto& [w, i] : index) out.push_back(w.size());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Completer {
 public:
  Completer(Field f, std::size_t cap, std::size_t max_rules) : f_(f), cap_(cap), max_rules_(max_rules) {}

  std::vector<RewriteRule> run(const std::vector<NCPolynomial>& relations) {
    for (const auto& r : relations) pending_.push_back(r);
    while (true) {
      while (!pending_.empty()) {
        NCPolynomial p = std::move(pending_.front());
        pending_.pop_front();
        add(std::move(p));
      }
      if (pairs_.empty()) break;
      auto [i, j] = pairs_.front();
      pairs_.pop_front();
      if (active_[i] && active_[j]) overlap(i, j);
    }
    std::vector<RewriteRule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) out.push_back(rules_[i]);
    return out;
  }

  std::size_t overlaps() const { return overlaps_; }

 private:
  NCPolynomial reduce(NCPolynomial p) const { return reduce_with(std::move(p), rules_, index_, lengths_); }

  void add(NCPolynomial p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return;
    p = p.scaled(p.leading_coeff().inverse());
    Word lead = p.leading_word();
    NCPolynomial tail = NCPolynomial::monomial(f_.one(), lead) - p;
    for (std::size_t j = 0; j < rules_.size(); ++j)
      if (active_[j] && occurs_in(lead, rules_[j].lead)) {
        active_[j] = false;
        --live_;
        index_.erase(rules_[j].lead);
        lengths_ = lead_lengths(index_);
        pending_.push_back(NCPolynomial::monomial(f_.one(), rules_[j].lead) - rules_[j].tail);
      }
    const std::size_t id = rules_.size();
    rules_.push_back({lead, tail});
    active_.push_back(true);
    ++live_;
    index_[lead] = id;
    lengths_ = lead_lengths(index_);
    for (std::size_t j = 0; j <= id; ++j)
      if (active_[j]) {
        pairs_.emplace_back(id, j);
        if (j != id) pairs_.emplace_back(j, id);
      }
    if (live_ > max_rules_)
      throw CompletionError("rule explosion: " + std::to_string(live_) + " rules after " + std::to_string(overlaps_) +
                                " overlaps (limit " + std::to_string(max_rules_) + ")",
                            live_, overlaps_);
  }

  // suffix of lead i against prefix of lead j
  void overlap(std::size_t i, std::size_t j) {
    const Word li = rules_[i].lead, lj = rules_[j].lead;
    const NCPolynomial ti = rules_[i].tail, tj = rules_[j].tail;
    const std::size_t m = std::min(li.size(), lj.size());
    for (std::size_t k = 1; k < m; ++k) {
      if (li.size() + lj.size() - k > cap_) continue;
      if (!std::equal(li.end() - k, li.end(), lj.begin())) continue;
      Word x(li.begin(), li.end() - k), y(lj.begin() + k, lj.end());
      ++overlaps_;
      NCPolynomial s = ti * NCPolynomial::monomial(f_.one(), y) - NCPolynomial::monomial(f_.one(), x) * tj;
      add(std::move(s));
      if (!active_[i] || !active_[j]) return;
    }
  }

  Field f_;
  std::size_t cap_, max_rules_;
  std::vector<RewriteRule> rules_;
  std::vector<bool> active_;
  std::size_t live_ = 0;
  LeadIndex index_;
  std::vector<std::size_t> lengths_;
  std::deque<NCPolynomial> pending_;
  std::deque<std::pair<std::size_t, std::size_t>> pairs_;
  std::size_t overlaps_ = 0;
};

// every overlap of degree <= cap and every relation reduce to 0
std::size_t certify(const RewriteSystem& rs, const std::vector<NCPolynomial>& relations, std::size_t cap) {
  const Field f = rs.field();
  const auto& rules = rs.rules();
  std::size_t count = 0;
  for (const auto& r : relations)
    if (!rs.reduce(r).is_zero()) throw std::logic_error("completion does not reduce a relation to zero");
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word &li = rules[i].lead, &lj = rules[j].lead;
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (li.size() + lj.size() - k > cap || !std::equal(li.end() - k, li.end(), lj.begin())) continue;
        Word x(li.begin(), li.end() - k), y(lj.begin() + k, lj.end());
        ++count;
        NCPolynomial s = rules[i].tail * NCPolynomial::monomial(f.one(), y) -
                         NCPolynomial::monomial(f.one(), x) * rules[j].tail;
        if (!rs.reduce(s).is_zero()) throw std::logic_error("completion left an unresolved overlap");
      }
    }
  return count;
}

std::string cache_directory(const CompletionOptions& opt) {
  if (!opt.use_cache) return "";
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  const char* env = std::getenv("HOPFGS_CACHE_DIR");
  return env ? env : "";
}

std::optional<std::vector<RewriteRule>> load_cache(const std::filesystem::path& file, Field f, const std::string& hash,
                                                   std::size_t cap, std::size_t& overlaps) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    std::string line, key;
    std::getline(in, line);
    if (line != "hopfgs-rules 1") return std::nullopt;
    std::string h;
    std::size_t c = 0, n = 0;
    in >> key >> h;
    if (key != "hash" || h != hash) return std::nullopt;
    in >> key >> c;
    if (key != "cap" || c != cap) return std::nullopt;
    in >> key >> overlaps >> key >> n;
    std::getline(in, line);
    std::vector<RewriteRule> rules;
    for (std::size_t i = 0; i < n; ++i) {
      std::getline(in, line);
      auto bar = line.find('|');
      if (bar == std::string::npos) return std::nullopt;
      rules.push_back({parse_word(line.substr(0, bar)), parse_poly(f, line.substr(bar + 1))});
    }
    std::string stored;
    in >> key >> stored;
    if (key != "checksum" || stored != rules_checksum(rules)) return std::nullopt;
    return rules;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cache(const std::filesystem::path& file, const std::string& hash, const RewriteSystem& rs) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  static std::atomic<unsigned> serial{0};
  auto tmp = file;
  tmp += ".tmp" + std::to_string(::getpid()) + "." + std::to_string(serial++);
  {
    std::ofstream out(tmp);
    if (!out) return;
    const auto& c = rs.certificate();
    out << "hopfgs-rules 1\nhash " << hash << "\ncap " << c.cap << "\noverlaps " << c.overlaps_checked << "\nrules "
        << rs.rules().size() << "\n";
    for (const auto& r : rs.rules()) out << rule_line(r) << "\n";
    out << "checksum " << c.checksum << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ULL;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

std::string word_to_string(const Word& w, const std::vector<std::string>& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += w[i] < alphabet.size() ? alphabet[w[i]] : "x" + std::to_string(w[i]);
  }
  return out;
}

NCPolynomial NCPolynomial::constant(const Scalar& c) { return monomial(c, {}); }

NCPolynomial NCPolynomial::monomial(const Scalar& c, Word w) {
  NCPolynomial p(c.field());
  p.add_term(w, c);
  return p;
}

Scalar NCPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? f_.zero() : it->second;
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
  if (f_.data() == nullptr) f_ = c.field();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  NCPolynomial r = *this;
  return r += o;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
  NCPolynomial r = *this;
  return r -= o;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  NCPolynomial r(f_.data() ? f_ : o.f_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) r.add_term(concat(a, b, {}), c * d);
  return r;
}

NCPolynomial NCPolynomial::scaled(const Scalar& c) const {
  NCPolynomial r(f_);
  for (const auto& [w, d] : terms_) r.add_term(w, c * d);
  return r;
}

std::string NCPolynomial::to_string(const std::vector<std::string>& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out += term_string(it->second, word_to_string(it->first, alphabet), it == terms_.rbegin());
  return out;
}

NCTensor NCTensor::pure(const NCPolynomial& x, const NCPolynomial& y) {
  NCTensor t(x.field());
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) t.add_term(a, b, c * d);
  return t;
}

void NCTensor::add_term(const Word& l, const Word& r, const Scalar& c) {
  if (f_.data() == nullptr) f_ = c.field();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({l, r}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCTensor& NCTensor::operator+=(const NCTensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w.first, w.second, c);
  return *this;
}

NCTensor NCTensor::operator-(const NCTensor& o) const {
  NCTensor r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w.first, w.second, -c);
  return r;
}

NCTensor NCTensor::operator*(const NCTensor& o) const {
  NCTensor r(f_.data() ? f_ : o.f_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_)
      r.add_term(concat(a.first, b.first, {}), concat(a.second, b.second, {}), c * d);
  return r;
}

std::string NCTensor::to_string(const std::vector<std::string>& left, const std::vector<std::string>& right) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string l = w.first.empty() ? "1" : word_to_string(w.first, left);
    std::string r = w.second.empty() ? "1" : word_to_string(w.second, right);
    out += term_string(c, l + " ⊗ " + r, first);
    first = false;
  }
  return out;
}

RewriteSystem::RewriteSystem(Field f, std::vector<RewriteRule> rules, CompletionCertificate cert)
    : f_(f), rules_(std::move(rules)), cert_(std::move(cert)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) index_[rules_[i].lead] = i;
  lengths_ = lead_lengths(index_);
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find(const Word& w) const {
  return find_lead(index_, lengths_, w);
}

bool RewriteSystem::is_normal(const Word& w) const { return !find(w).has_value(); }

NCPolynomial RewriteSystem::reduce(NCPolynomial p) const {
  if (p.field().data() == nullptr) p = NCPolynomial(f_);
  return reduce_with(std::move(p), rules_, index_, lengths_);
}

std::string rules_checksum(const std::vector<RewriteRule>& rules) {
  Fnv f;
  for (const auto& r : rules) f.add(rule_line(r));
  return f.hex();
}

std::string presentation_hash(const PresentedHopf& h) {
  Fnv f;
  f.add(h.field.to_string());
  f.add(std::to_string(h.cap));
  f.add(std::to_string(h.alphabet.size()));
  for (const auto& r : h.relations) f.add(serialize(r));
  return f.hex();
}

PresentedHopf complete_to_cap(PresentedHopf h, const CompletionOptions& opt) {
  for (const auto& r : h.relations)
    if (r.degree() > h.cap)
      throw DegreeError("relation of degree " + std::to_string(r.degree()) + " above cap " + std::to_string(h.cap));
  CompletionCertificate cert;
  cert.cap = h.cap;
  cert.presentation_hash = presentation_hash(h);
  const std::string dir = cache_directory(opt);
  std::filesystem::path file;
  if (!dir.empty()) {
    file = std::filesystem::path(dir) / (cert.presentation_hash + ".rules");
    std::size_t overlaps = 0;
    if (auto rules = load_cache(file, h.field, cert.presentation_hash, h.cap, overlaps)) {
      cert.overlaps_checked = overlaps;
      cert.rule_count = rules->size();
      cert.checksum = rules_checksum(*rules);
      cert.from_cache = true;
      h.rules = std::make_shared<const RewriteSystem>(h.field, std::move(*rules), cert);
      return h;
    }
  }

  Completer c(h.field, h.cap, opt.max_rules);
  auto raw = c.run(h.relations);
  // fully reduced tails, deglex order of leads
  RewriteSystem interim(h.field, raw, cert);
  for (auto& r : raw) r.tail = interim.reduce(r.tail);
  std::sort(raw.begin(), raw.end(), [](const RewriteRule& a, const RewriteRule& b) { return deglex_less(a.lead, b.lead); });
  cert.rule_count = raw.size();
  cert.checksum = rules_checksum(raw);
  auto rs = std::make_shared<RewriteSystem>(h.field, std::move(raw), cert);
  cert.overlaps_checked = certify(*rs, h.relations, h.cap);
  rs = std::make_shared<RewriteSystem>(h.field, rs->rules(), cert);
  if (!file.empty()) store_cache(file, cert.presentation_hash, *rs);
  h.rules = std::move(rs);
  return h;
}

}  // namespace hgs
