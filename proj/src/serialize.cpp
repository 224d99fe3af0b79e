#include "bicoarse/serialize.hpp"

#include <charconv>

namespace bicoarse {

namespace {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorKind::InvalidInput, "expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorKind::InvalidInput, "expected an integer, got '" + std::string(text) + "'");
  }
  const BigInt v{std::string(digits)};
  return text.front() == '-' ? BigInt(-v) : v;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected an integer or a rational string, got " + j.dump());
}

long long_from_key(const std::string& key) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || ptr != key.data() + key.size()) {
    throw Error(ErrorKind::InvalidInput, "expected an integer key, got '" + key + "'");
  }
  return v;
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw Error(ErrorKind::InvalidInput, std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

std::string string_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_string()) throw Error(ErrorKind::InvalidInput, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::string big_string(const BigInt& v) { return v.str(); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorKind::InvalidInput, "denominator must be unsigned in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Quasimorphism quasimorphism_from_json(const Json& spec, const Alphabet& alphabet) {
  if (!spec.is_object() || spec.size() != 1) {
    throw Error(ErrorKind::InvalidInput, "quasimorphism spec must be an object with one key, got " + spec.dump());
  }
  const auto& [key, value] = *spec.items().begin();
  if (key == "brooks" || key == "brooksNO") {
    if (!value.is_string()) throw Error(ErrorKind::InvalidInput, key + " expects a word string");
    ReducedWord pattern = parse_reduced(value.get<std::string>(), alphabet);
    return key == "brooks" ? Quasimorphism::brooks(std::move(pattern))
                           : Quasimorphism::brooks_non_overlap(std::move(pattern));
  }
  if (key == "rolli") {
    if (!value.is_object()) throw Error(ErrorKind::InvalidInput, "rolli expects an object {k: alpha(k)}");
    std::map<long, Rational> table;
    for (const auto& [k, a] : value.items()) table[long_from_key(k)] = rational_from_json(a);
    return Quasimorphism::rolli(table);
  }
  if (key == "hom") {
    if (!value.is_object()) throw Error(ErrorKind::InvalidInput, "hom expects an object {generator: value}");
    std::vector<Rational> coefficients(static_cast<std::size_t>(alphabet.rank()));
    for (const auto& [g, c] : value.items()) {
      if (g.size() != 1 || g[0] < 'a' || g[0] > 'z') {
        throw Error(ErrorKind::InvalidInput, "hom keys are lowercase generators, got '" + g + "'");
      }
      const int gen = g[0] - 'a';
      if (gen >= alphabet.rank()) {
        throw Error(ErrorKind::RankExceeded, "generator '" + g + "' exceeds rank " + std::to_string(alphabet.rank()));
      }
      coefficients[static_cast<std::size_t>(gen)] = rational_from_json(c);
    }
    return Quasimorphism::exponent_hom(std::move(coefficients));
  }
  throw Error(ErrorKind::InvalidInput, "unknown quasimorphism kind '" + key + "'");
}

ReplacementRule replacement_rule_from_json(const Json& rule, const Alphabet& alphabet) {
  return ReplacementRule(parse_reduced(string_field(rule, "w1"), alphabet),
                         parse_reduced(string_field(rule, "w2"), alphabet));
}

Wobble wobble_from_json(const Json& rule, const Alphabet& alphabet) {
  const Json& sigma_json = field(rule, "sigma");
  if (!sigma_json.is_object()) throw Error(ErrorKind::InvalidRule, "sigma must be an object {k: sigma(k)}");
  std::map<long, long> sigma;
  for (const auto& [k, v] : sigma_json.items()) {
    if (!v.is_number_integer()) throw Error(ErrorKind::InvalidRule, "sigma values must be integers");
    sigma[long_from_key(k)] = v.get<long>();
  }
  return Wobble(parse_reduced(string_field(rule, "v"), alphabet), std::move(sigma));
}

LocalRule local_rule_from_json(const Json& rule, const Alphabet& alphabet) {
  const Json& k_json = field(rule, "k");
  if (!k_json.is_number_integer() || k_json.get<long>() < 1) {
    throw Error(ErrorKind::InvalidRule, "k must be a positive integer");
  }
  const std::size_t k = k_json.get<std::size_t>();
  int target_rank = alphabet.rank();
  if (rule.contains("target_rank")) {
    if (!rule.at("target_rank").is_number_integer()) throw Error(ErrorKind::InvalidRule, "target_rank must be an integer");
    target_rank = rule.at("target_rank").get<int>();
  }
  const Alphabet target(target_rank);
  const Json& table_json = field(rule, "table");
  if (!table_json.is_object()) throw Error(ErrorKind::InvalidRule, "table must be an object {window: image}");
  std::map<Word, ReducedWord> table;
  for (const auto& [window, image] : table_json.items()) {
    Word u = parse(window, alphabet);
    if (u.size() != k) {
      throw Error(ErrorKind::InvalidRule, "window '" + window + "' does not have length " + std::to_string(k));
    }
    if (!image.is_string()) throw Error(ErrorKind::InvalidRule, "images must be word strings");
    table[std::move(u)] = parse_reduced(image.get<std::string>(), target);
  }
  return LocalRule(k, std::move(table));
}

Json to_json(const CancellationCertificate& cert) {
  Json matching = Json::array();
  for (const auto& [i, j] : cert.matching) matching.push_back({i, j});
  return Json{{"deleted", cert.deleted}, {"matching", std::move(matching)}};
}

Json to_json(const MoveSequence& seq) {
  Json moves = Json::array();
  for (const Move& m : seq.moves) {
    if (m.kind == MoveKind::Cancellation) {
      moves.push_back({{"kind", "cancel"}, {"index", m.index}});
    } else {
      moves.push_back({{"kind", "add"},
                       {"split", m.split},
                       {"conjugator", to_string(m.conjugator)},
                       {"letter", std::string(1, m.letter.to_char())}});
    }
  }
  const std::vector<ReducedWord> path = replay(seq);
  Json words = Json::array();
  for (const auto& w : path) words.push_back(to_string(w));
  return Json{{"start", to_string(seq.start)},
              {"end", to_string(path.back())},
              {"length", seq.moves.size()},
              {"moves", std::move(moves)},
              {"path", std::move(words)}};
}

Json to_json(const ProfiniteWitness& w) {
  Json steps = Json::array();
  for (std::size_t n = 0; n < w.exponents.size(); ++n) {
    Json factors = Json::object();
    for (const auto& [p, e] : w.factorizations[n]) factors[std::to_string(p)] = big_string(e);
    Json step{{"n", n + 1},
              {"P", big_string(w.products[n])},
              {"a", big_string(w.exponents[n])},
              {"k_factorization", std::move(factors)}};
    step["k"] = w.values[n] ? Json(big_string(*w.values[n])) : Json(nullptr);
    step["l"] = n < w.moduli.size() ? Json(w.moduli[n]) : Json(nullptr);
    steps.push_back(std::move(step));
  }
  return Json{{"Q", w.primes}, {"q", w.q}, {"steps", std::move(steps)}};
}

}  // namespace bicoarse
