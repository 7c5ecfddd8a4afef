#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sadic/asymptotics.hpp"
#include "sadic/automorphism.hpp"
#include "sadic/cli.hpp"
#include "sadic/fixture.hpp"

namespace py = pybind11;
using namespace sadic;

namespace {

// The python surface trades Word values for plain strings; every call names
// its alphabet context explicitly (a Fixture or an alphabet spelling).

Alphabet alphabet_from(const std::string& symbols) {
  std::vector<std::string> syms;
  std::istringstream in(symbols);
  std::string t;
  while (in >> t) syms.push_back(t);
  if (syms.size() == 1 && symbols.find(' ') == std::string::npos && symbols.size() > 1) {
    syms.clear();
    for (char c : symbols) syms.emplace_back(1, c);
  }
  return Alphabet(std::move(syms));
}

WordSet set_from(const Alphabet& a, const std::vector<std::string>& words) {
  return WordSet::parse(a, words);
}

std::vector<std::string> strs(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

py::dict interp_dict(const Interpretation& i) {
  py::dict d;
  d["head"] = i.head.str();
  d["blocks"] = strs(i.blocks);
  d["tail"] = i.tail.str();
  d["next"] = i.head.alphabet().symbol(i.next);
  d["head_witness"] = i.head_witness.str();
  d["tail_witness"] = i.tail_witness.str();
  return d;
}

struct PyFixture {
  FixtureSpec spec;
  DirectiveSequence sequence;

  explicit PyFixture(const std::string& text, const std::string& name)
      : spec(parse_fixture(text, name)), sequence(spec.to_sequence()) {}
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "word interpretations, reduction bounds and asymptotic-class estimates "
            "for S-adic subshifts";
  m.attr("__version__") = kVersion;

  py::register_exception<error>(m, "SadicError");

  m.def("periods", [](const std::string& alphabet, const std::string& word) {
    return periods(Word::parse(alphabet_from(alphabet), word));
  });
  m.def("least_period", [](const std::string& alphabet, const std::string& word) {
    return least_period(Word::parse(alphabet_from(alphabet), word));
  });
  m.def("fine_wilf",
        [](const std::string& alphabet, const std::string& word, std::size_t p, std::size_t q) {
          return fine_wilf(Word::parse(alphabet_from(alphabet), word), p, q);
        });
  m.def("star_factorizations",
        [](const std::string& alphabet, const std::string& word,
           const std::vector<std::string>& set_words) {
          Alphabet a = alphabet_from(alphabet);
          std::vector<std::vector<std::string>> out;
          for (const auto& f : star_factorizations(Word::parse(a, word), set_from(a, set_words)))
            out.push_back(strs(f));
          return out;
        });

  m.def("interpretations",
        [](const std::string& alphabet, const std::string& word,
           const std::vector<std::string>& set_words) {
          Alphabet a = alphabet_from(alphabet);
          py::list out;
          for (const auto& i :
               enumerate_interpretations(Word::parse(a, word), set_from(a, set_words)))
            out.append(interp_dict(i));
          return out;
        });
  m.def("simple_double_interpretations",
        [](const std::string& alphabet, const std::string& word,
           const std::vector<std::string>& set_words) {
          Alphabet a = alphabet_from(alphabet);
          py::list out;
          for (const auto& di :
               enumerate_simple_doubles(Word::parse(a, word), set_from(a, set_words))) {
            py::dict d;
            d["word"] = di.word().str();
            d["first"] = interp_dict(di.first);
            d["second"] = interp_dict(di.second);
            out.append(d);
          }
          return out;
        });

  m.def("build_b_set",
        [](const std::string& alphabet, const std::vector<std::string>& set_words,
           std::size_t len_cap, bool exact) {
          Alphabet a = alphabet_from(alphabet);
          BSetResult r = build_b_set(set_from(a, set_words), len_cap, exact);
          py::dict d;
          d["words"] = strs(r.words);
          d["bound"] = r.cardinality_bound;
          d["max_bucket_irreducible"] = r.max_bucket_irreducible;
          d["buckets"] = r.buckets.size();
          d["simple_doubles"] = r.simple_double_count;
          d["ok"] = r.bounds_ok;
          return d;
        },
        py::arg("alphabet"), py::arg("set_words"), py::arg("len_cap"), py::arg("exact") = true);

  py::class_<PyFixture>(m, "Fixture")
      .def(py::init<const std::string&, const std::string&>(), py::arg("text"),
           py::arg("name") = "fixture")
      .def_property_readonly("horizon", [](const PyFixture& f) { return f.spec.horizon; })
      .def_property_readonly("alphabet",
                             [](const PyFixture& f) {
                               std::vector<std::string> out;
                               for (int i = 0; i < f.spec.alphabet.size(); ++i)
                                 out.push_back(f.spec.alphabet.symbol(i));
                               return out;
                             })
      .def("level_words",
           [](const PyFixture& f, int n) { return strs(f.sequence.level_word_set(n).words()); })
      .def("language",
           [](const PyFixture& f, int level, std::size_t cap) {
             LanguageTable lang = level_language(f.sequence, level, cap);
             py::dict d;
             for (std::size_t len = 1; len <= cap; ++len)
               d[py::int_(len)] = strs(lang.words_of_length(len));
             return d;
           })
      .def("alphabet_rank", [](const PyFixture& f) { return alphabet_rank(f.sequence); })
      .def("everywhere_growing",
           [](const PyFixture& f) {
             GrowthReport g = is_everywhere_growing(f.sequence, f.sequence.horizon());
             return py::make_tuple(g.everywhere_growing, g.trace);
           })
      .def("right_special",
           [](const PyFixture& f, std::size_t depth) {
             LanguageTable lang = level_language(f.sequence, 0, depth + 1);
             std::vector<std::string> out;
             for (const auto& pair : disagreement_pairs(lang, depth))
               out.push_back(pair.past.str());
             return out;
           })
      .def("asymptotic_classes",
           [](const PyFixture& f, const std::vector<std::size_t>& depths) {
             AsymptoticReport r = count_asymptotic_classes(f.sequence, depths);
             py::dict d;
             d["estimate"] = r.class_count_estimate;
             d["stabilized"] = r.stabilized;
             d["bound"] = r.bound;
             d["right_special"] = r.right_special_count;
             d["ok"] = r.bound_ok;
             return d;
           })
      .def("automorphism_census",
           [](const PyFixture& f, std::size_t radius, std::size_t depth) {
             LanguageTable lang = level_language(f.sequence, 0, 2 * radius + 1 + depth);
             auto cands = enumerate_automorphism_candidates(lang, radius, depth);
             return py::make_tuple(cands.size(), quotient_census(cands, lang));
           })
      .def("verify_covering",
           [](const PyFixture& f, const std::vector<int>& levels, std::size_t depth) {
             CoveringReport r = verify_covering(f.sequence, levels, depth);
             py::dict d;
             d["pass"] = r.pass;
             py::list lv;
             for (const auto& l : r.levels) {
               py::dict e;
               e["level"] = l.level;
               e["B_size"] = l.b_size;
               e["pairs"] = l.pairs_checked;
               e["failures"] = l.covering_failures;
               lv.append(e);
             }
             d["levels"] = lv;
             return d;
           });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
