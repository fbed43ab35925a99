// Copyright 2026 The lexcov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lexcov: compile DELAF dictionaries, apply them to corpora, measure
// lexical coverage and classify the words left uncovered.
//
// Exit status: 0 success, 1 environment or I/O failure, 2 invalid input.

#include "lexcov/classifier.hpp"
#include "lexcov/coverage.hpp"
#include "lexcov/delaf.hpp"
#include "lexcov/dico.hpp"
#include "lexcov/error.hpp"
#include "lexcov/lexicon.hpp"
#include "lexcov/preprocess.hpp"
#include "lexcov/tsv.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <zlib.h>

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <mutex>
#include <thread>

#ifndef LEXCOV_VERSION
#define LEXCOV_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace lexcov;

namespace {

constexpr int exit_io = 1;
constexpr int exit_invalid = 2;

// Invalid input, with the file position already in the message.
class InputError : public Error {
      public:
	using Error::Error;
};

auto read_file(const fs::path& path) -> std::string
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	if (in.bad())
		throw IoError("cannot read " + path.string());
	return buf.str();
}

auto write_file(const fs::path& path, std::string_view data) -> void
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw IoError("cannot write " + path.string());
	out.write(data.data(), static_cast<std::streamsize>(data.size()));
	if (!out)
		throw IoError("cannot write " + path.string());
}

auto crc32_hex(std::string_view data) -> std::string
{
	auto const c = crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
	                     static_cast<uInt>(data.size()));
	char buf[9];
	std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(c));
	return buf;
}

auto file_record(const fs::path& path) -> json
{
	auto const data = read_file(path);
	return {{"path", path.generic_string()},
	        {"bytes", data.size()},
	        {"crc32", crc32_hex(data)}};
}

// Expands each argument: directories give their regular files, patterns
// go through glob(3), plain paths are kept. Result is sorted per argument.
auto expand_inputs(const std::vector<std::string>& args) -> std::vector<fs::path>
{
	std::vector<fs::path> out;
	for (auto const& a : args) {
		std::vector<fs::path> found;
		if (fs::is_directory(a)) {
			for (auto const& e : fs::directory_iterator(a))
				if (e.is_regular_file())
					found.push_back(e.path());
		} else if (a.find_first_of("*?[") != std::string::npos) {
			glob_t g{};
			if (::glob(a.c_str(), 0, nullptr, &g) == 0)
				for (std::size_t i = 0; i < g.gl_pathc; ++i)
					found.emplace_back(g.gl_pathv[i]);
			::globfree(&g);
			if (found.empty())
				throw IoError("no files match " + a);
		} else {
			if (!fs::exists(a))
				throw IoError("no such file " + a);
			found.emplace_back(a);
		}
		std::sort(found.begin(), found.end());
		out.insert(out.end(), found.begin(), found.end());
	}
	return out;
}

auto parse_policy(const std::string& s) -> CaseFoldPolicy
{
	auto p = parse_case_policy(s);
	if (!p)
		throw ConfigError("unknown case policy '" + s + "'");
	return *p;
}

auto parse_locale(const std::string& s) -> NumberLocale
{
	auto l = parse_number_locale(s);
	if (!l)
		throw ConfigError("unknown locale '" + s + "'");
	return *l;
}

auto load_dicts(const std::vector<std::string>& paths, DictRole role)
    -> std::vector<DictFile>
{
	std::vector<DictFile> files;
	for (auto const& p : expand_inputs(paths)) {
		try {
			files.push_back(load_dict_file(p, role));
		}
		catch (const MalformedEntry& e) {
			throw InputError(p.string() + ":" +
			                 std::to_string(e.line_number()) + ":" +
			                 std::to_string(e.column()) + ": " +
			                 e.reason() + ": " + e.line());
		}
	}
	return files;
}

auto load_lexicons(const std::vector<std::string>& paths) -> Lexicon
{
	std::vector<Lexicon> parts;
	for (auto const& p : paths)
		parts.push_back(Lexicon::load(p));
	if (parts.size() == 1)
		return std::move(parts.front());
	return Lexicon::merged(parts);
}

auto default_dict_id(const std::vector<std::string>& paths) -> std::string
{
	std::string id;
	for (auto const& p : paths) {
		if (!id.empty())
			id += "+";
		id += fs::path(p).stem().string();
	}
	return id;
}

auto default_corpus_id(const std::vector<fs::path>& files) -> std::string
{
	if (files.empty())
		return "empty";
	if (files.size() == 1)
		return files.front().stem().string();
	auto const parent = files.front().parent_path().filename().string();
	return parent.empty() ? "corpus" : parent;
}

struct CorpusOptions {
	std::vector<std::string> inputs;
	std::string abbreviations;
	std::string replacements;
	std::string corpus_id;
	unsigned jobs = 1;
};

auto load_preprocess_options(const CorpusOptions& o) -> PreprocessOptions
{
	PreprocessOptions p;
	if (!o.abbreviations.empty())
		p.abbreviations = AbbreviationList::load(o.abbreviations);
	if (!o.replacements.empty())
		p.replacements = ReplacementTable::load(o.replacements);
	return p;
}

// Runs `work(i)` for i in [0, n) on up to `jobs` threads. The first
// exception thrown by any worker is rethrown here.
template <class F>
auto parallel_for(std::size_t n, unsigned jobs, F work) -> void
{
	jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
	if (jobs <= 1) {
		for (std::size_t i = 0; i < n; ++i)
			work(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	{
		std::vector<std::jthread> pool;
		for (unsigned t = 0; t < jobs; ++t)
			pool.emplace_back([&] {
				for (;;) {
					auto const i = next.fetch_add(1);
					if (i >= n)
						return;
					try {
						work(i);
					}
					catch (...) {
						std::lock_guard lock(failure_mutex);
						if (!failure)
							failure = std::current_exception();
						next = n;
					}
				}
			});
	}
	if (failure)
		std::rethrow_exception(failure);
}

auto run_dico(const Lexicon& lex, const std::vector<fs::path>& files,
              const PreprocessOptions& pre, CaseFoldPolicy policy,
              unsigned jobs) -> DicoResult
{
	std::vector<DicoResult> parts(files.size());
	parallel_for(files.size(), jobs, [&](std::size_t i) {
		auto const stream =
		    preprocess(read_file(files[i]), files[i].generic_string(), pre);
		parts[i] = apply_dictionaries(lex, stream, policy);
	});
	DicoResult all;
	all.policy = policy;
	for (auto const& p : parts)
		all = merge_results(std::move(all), p);
	return all;
}

auto timestamp() -> std::string
{
	std::time_t t{};
	if (auto const* e = std::getenv("SOURCE_DATE_EPOCH"))
		t = static_cast<std::time_t>(std::strtoll(e, nullptr, 10));
	else
		t = std::time(nullptr);
	std::tm tm{};
	gmtime_r(&t, &tm);
	char buf[32];
	std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
	return buf;
}

auto stats_json(const LexiconStats& s) -> json
{
	return {{"entries", s.entry_count},
	        {"unique_forms", s.unique_form_count},
	        {"folded_unique_forms", s.folded_unique_form_count},
	        {"simple_forms", s.simple_form_count},
	        {"compound_forms", s.compound_form_count},
	        {"analyses", s.analysis_count},
	        {"states", s.state_count},
	        {"transitions", s.transition_count}};
}

auto counts_json(const DicoCounts& c) -> json
{
	return {{"word_tokens", c.word_tokens},
	        {"known_simple", c.known_simple},
	        {"in_compound_only", c.in_compound_only},
	        {"unknown", c.unknown},
	        {"number_tokens", c.number_tokens},
	        {"compound_matches", c.compound_matches},
	        {"sentences", c.sentences}};
}

// ---------------------------------------------------------------- compile

struct CompileArgs {
	std::vector<std::string> dicts;
	std::string role = "general";
	std::string output;
	bool json = false;
};

auto cmd_compile(const CompileArgs& a) -> int
{
	auto const role = parse_dict_role(a.role);
	if (!role)
		throw ConfigError("unknown role '" + a.role + "'");
	auto const files = load_dicts(a.dicts, *role);
	auto const lex = Lexicon::compile(files);
	lex.save(a.output);
	auto const& s = lex.stats();
	if (a.json)
		std::cout << stats_json(s).dump(2) << '\n';
	std::cerr << "entries " << s.entry_count << ", unique forms "
	          << s.unique_form_count << " (" << s.folded_unique_form_count
	          << " folded), compounds " << s.compound_form_count
	          << ", analyses " << s.analysis_count << ", states "
	          << s.state_count << ", transitions " << s.transition_count
	          << '\n';
	return 0;
}

// ------------------------------------------------------------------ apply

struct ApplyArgs {
	std::vector<std::string> lexicons;
	CorpusOptions corpus;
	std::string policy = "unitex_like";
	std::string dict_id;
	std::string output;
};

auto cmd_apply(const ApplyArgs& a, const std::vector<std::string>& argv) -> int
{
	auto const policy = parse_policy(a.policy);
	auto const files = expand_inputs(a.corpus.inputs);
	auto const pre = load_preprocess_options(a.corpus);
	auto const lex = load_lexicons(a.lexicons);

	auto result = run_dico(lex, files, pre, policy, a.corpus.jobs);
	result.corpus_id = a.corpus.corpus_id.empty() ? default_corpus_id(files)
	                                              : a.corpus.corpus_id;
	fs::path const out(a.output);
	write_dico_outputs(result, out);

	json m;
	m["tool"] = "lexcov";
	m["version"] = LEXCOV_VERSION;
	// The program path depends on the install location, not on the run.
	auto command = argv;
	if (!command.empty())
		command.front() =
		    std::filesystem::path(command.front()).filename().string();
	m["command"] = command;
	m["timestamp"] = timestamp();
	m["corpus_id"] = result.corpus_id;
	m["dict_id"] = a.dict_id.empty() ? default_dict_id(a.lexicons) : a.dict_id;
	m["policy"] = to_string(policy);
	json lexicons = json::array();
	for (auto const& p : a.lexicons)
		lexicons.push_back(file_record(p));
	m["lexicons"] = lexicons;
	json corpus = json::array();
	for (auto const& p : files)
		corpus.push_back(file_record(p));
	m["corpus"] = corpus;
	json config = json::object();
	if (!a.corpus.abbreviations.empty())
		config["abbreviations"] = file_record(a.corpus.abbreviations);
	if (!a.corpus.replacements.empty())
		config["replacements"] = file_record(a.corpus.replacements);
	m["config"] = config;
	m["counts"] = counts_json(result.counts);
	json compounds = json::array();
	std::vector<std::pair<std::string, std::uint64_t>> dlc;
	for (auto const& [e, n] : result.dlc)
		dlc.emplace_back(serialize_entry(e), n);
	std::sort(dlc.begin(), dlc.end());
	for (auto const& [line, n] : dlc)
		compounds.push_back({{"entry", line}, {"occurrences", n}});
	m["compound_occurrences"] = compounds;
	json outputs = json::object();
	for (auto const* name : {"dlf", "dlc", "err", "annotations.tsv"})
		outputs[name] = crc32_hex(read_file(out / name));
	m["outputs"] = outputs;
	write_file(out / "run.json", m.dump(2) + "\n");

	auto const& c = result.counts;
	std::cerr << "word tokens " << c.word_tokens << ": known "
	          << c.known_simple << ", in compounds only "
	          << c.in_compound_only << ", unknown " << c.unknown << "; "
	          << result.err.size() << " unknown forms\n";
	return 0;
}

// --------------------------------------------------------------- coverage

struct CoverageArgs {
	std::vector<std::string> runs;
	std::string counts;
	std::vector<std::string> lexicons;
	CorpusOptions corpus;
	std::string policy = "unitex_like";
	std::string dict_id;
	std::string format = "text";
	std::string locale = "plain";
	bool cased = false;
};

auto read_run(const fs::path& dir) -> std::pair<DicoResult, std::string>
{
	auto const manifest = json::parse(read_file(dir / "run.json"), nullptr,
	                                  false);
	if (manifest.is_discarded() || !manifest.is_object())
		throw ConfigError((dir / "run.json").string() + ": not valid JSON");
	DicoResult r;
	r.corpus_id = manifest.value("corpus_id", "");
	r.policy = parse_case_policy(manifest.value("policy", ""));
	r.annotations = read_annotations(dir / "annotations.tsv");
	std::istringstream err(read_file(dir / "err"));
	for (std::string line; std::getline(err, line);)
		if (!line.empty())
			r.err.insert(line);
	return {std::move(r), manifest.value("dict_id", "")};
}

struct Rendered {
	std::vector<CoverageReport> reports;
	std::vector<VersionDelta> deltas;
};

// Consecutive reports of the same corpus are taken as old then new.
auto with_deltas(std::vector<CoverageReport> reports) -> Rendered
{
	Rendered r;
	for (std::size_t i = 0; i < reports.size(); ++i)
		for (std::size_t j = i + 1; j < reports.size(); ++j)
			if (reports[j].corpus_id == reports[i].corpus_id) {
				r.deltas.push_back(
				    compare_versions(reports[i], reports[j]));
				break;
			}
	r.reports = std::move(reports);
	return r;
}

auto read_counts_file(const fs::path& path) -> std::vector<CoverageReport>
{
	std::istringstream in(read_file(path));
	std::vector<CoverageReport> out;
	std::size_t n = 0;
	bool header = true;
	for (std::string line; std::getline(in, line);) {
		++n;
		if (line.empty() || line.front() == '#')
			continue;
		if (header) {
			header = false;
			continue;
		}
		auto const f = tsv::split(line);
		if (f.size() != 6)
			throw ConfigError(path.string() + ":" + std::to_string(n) +
			                  ": expected 6 columns");
		std::uint64_t v[4];
		for (int i = 0; i < 4; ++i) {
			std::size_t used = 0;
			try {
				v[i] = std::stoull(f[i + 2], &used);
			}
			catch (const std::exception&) {
				used = 0;
			}
			if (used == 0 || used != f[i + 2].size())
				throw ConfigError(path.string() + ":" +
				                  std::to_string(n) + ": bad count '" +
				                  f[i + 2] + "'");
		}
		try {
			out.push_back(make_report(f[0], f[1], v[0], v[1], v[2], v[3]));
		}
		catch (const std::invalid_argument& e) {
			throw ConfigError(path.string() + ":" + std::to_string(n) +
			                  ": " + e.what());
		}
	}
	return out;
}

auto print_rendered(const Rendered& r, const std::string& format,
                    NumberLocale locale) -> void
{
	if (format == "json") {
		json j;
		j["reports"] = json::array();
		for (auto const& rep : r.reports)
			j["reports"].push_back(json::parse(render_json(rep)));
		j["deltas"] = json::array();
		for (auto const& d : r.deltas)
			j["deltas"].push_back(json::parse(render_json(d)));
		if (r.deltas.size() > 1)
			j["mean_delta"] = json::parse(render_json(mean_delta(r.deltas)));
		std::cout << j.dump(2) << '\n';
		return;
	}
	bool first = true;
	auto sep = [&] {
		if (!first)
			std::cout << '\n';
		first = false;
	};
	for (auto const& rep : r.reports) {
		sep();
		std::cout << render_text(rep, locale);
	}
	for (auto const& d : r.deltas) {
		sep();
		std::cout << render_text(d, locale);
	}
	if (r.deltas.size() > 1) {
		sep();
		std::cout << render_text(mean_delta(r.deltas), locale);
	}
}

auto cmd_coverage(const CoverageArgs& a) -> int
{
	if (a.format != "text" && a.format != "json")
		throw ConfigError("unknown format '" + a.format + "'");
	auto const locale = parse_locale(a.locale);
	auto const mode = a.cased ? FoldMode::cased : FoldMode::folded;
	std::vector<CoverageReport> reports;

	if (!a.counts.empty()) {
		reports = read_counts_file(a.counts);
	} else if (!a.runs.empty()) {
		// Comparing runs made under different case policies would mix
		// matching rules into the delta.
		std::optional<CaseFoldPolicy> policy;
		for (auto const& dir : a.runs) {
			auto const [result, dict_id] = read_run(dir);
			if (policy && result.policy && *policy != *result.policy)
				throw PolicyMismatch(
				    dir + " was run with " +
				    std::string(to_string(*result.policy)) + ", not " +
				    std::string(to_string(*policy)));
			if (!policy)
				policy = result.policy;
			auto const words = build_word_list(result, mode);
			reports.push_back(coverage(words, result, dict_id));
		}
	} else if (!a.lexicons.empty()) {
		auto const policy = parse_policy(a.policy);
		auto const files = expand_inputs(a.corpus.inputs);
		auto const lex = load_lexicons(a.lexicons);
		auto result = run_dico(lex, files, load_preprocess_options(a.corpus),
		                       policy, a.corpus.jobs);
		result.corpus_id = a.corpus.corpus_id.empty()
		                       ? default_corpus_id(files)
		                       : a.corpus.corpus_id;
		auto const words = build_word_list(result, mode);
		reports.push_back(coverage(
		    words, result,
		    a.dict_id.empty() ? default_dict_id(a.lexicons) : a.dict_id));
	} else {
		throw ConfigError("coverage needs run directories, --counts, or "
		                  "--lexicon with corpus files");
	}
	print_rendered(with_deltas(std::move(reports)), a.format, locale);
	return 0;
}

// --------------------------------------------------------------- classify

struct ClassifyArgs {
	std::string run;
	std::string records;
	std::string lexicon;
	std::string old_lexicon;
	std::string config;
	std::string output;
};

auto cmd_classify(const ClassifyArgs& a) -> int
{
	auto const config = a.config.empty() ? ClassifierConfig{}
	                                     : ClassifierConfig::load(a.config);
	std::vector<UnknownRecord> records;
	if (!a.records.empty())
		records = load_records(a.records);
	else if (!a.run.empty())
		records = build_records(read_annotations(fs::path(a.run) /
		                                         "annotations.tsv"));
	else
		throw ConfigError("classify needs a run directory or --records");

	auto const lex_new = Lexicon::load(a.lexicon);
	std::optional<Lexicon> lex_old;
	if (!a.old_lexicon.empty())
		lex_old = Lexicon::load(a.old_lexicon);
	auto const out = classify(std::move(records), lex_new,
	                          lex_old ? &*lex_old : nullptr, config);

	auto const hist = category_histogram(out);
	std::string histogram = "category\tforms\n";
	for (auto const& [c, n] : hist)
		histogram += std::string(to_string(c)) + "\t" + std::to_string(n) +
		             "\n";

	fs::path dir = a.output.empty() ? fs::path(a.run) : fs::path(a.output);
	if (dir.empty()) {
		std::cout << classification_tsv(out);
	} else {
		fs::create_directories(dir);
		write_file(dir / "classification.tsv", classification_tsv(out));
		write_file(dir / "histogram.tsv", histogram);
	}
	std::cerr << histogram;
	return 0;
}

// ------------------------------------------------------------------- diff

struct DiffArgs {
	std::vector<std::string> a;
	std::vector<std::string> b;
	bool fold = false;
	std::string format = "text";
	std::string locale = "plain";
};

auto cmd_diff(const DiffArgs& a) -> int
{
	auto const locale = parse_locale(a.locale);
	auto const da = load_dicts(a.a, DictRole::general);
	auto const db = load_dicts(a.b, DictRole::general);
	auto const d = diff_dictionaries(
	    da, db, a.fold ? FoldMode::folded : FoldMode::cased);
	if (a.format == "json")
		std::cout << render_json(d);
	else if (a.format == "text")
		std::cout << render_text(d, locale);
	else
		throw ConfigError("unknown format '" + a.format + "'");
	return 0;
}

// --------------------------------------------------------------- wordlist

struct WordListArgs {
	CorpusOptions corpus;
	bool cased = false;
	std::string output;
};

auto cmd_wordlist(const WordListArgs& a) -> int
{
	auto const files = expand_inputs(a.corpus.inputs);
	auto const pre = load_preprocess_options(a.corpus);
	std::vector<TokenStream> streams(files.size());
	parallel_for(files.size(), a.corpus.jobs, [&](std::size_t i) {
		streams[i] =
		    preprocess(read_file(files[i]), files[i].generic_string(), pre);
	});
	auto const words = build_word_list(
	    streams, a.cased ? FoldMode::cased : FoldMode::folded,
	    a.corpus.corpus_id.empty() ? default_corpus_id(files)
	                               : a.corpus.corpus_id);
	auto const tsv = word_list_tsv(words);
	if (a.output.empty())
		std::cout << tsv;
	else
		write_file(a.output, tsv);
	std::cerr << "types " << words.type_count() << ", tokens "
	          << words.token_count() << '\n';
	return 0;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
	std::vector<std::string> lexicons;
	CorpusOptions corpus;
	std::string policy = "unitex_like";
	unsigned repeat = 3;
};

auto cmd_bench(const BenchArgs& a) -> int
{
	using clock = std::chrono::steady_clock;
	auto const policy = parse_policy(a.policy);
	auto const t0 = clock::now();
	auto const lex = load_lexicons(a.lexicons);
	auto const t1 = clock::now();
	std::vector<std::string> words;
	for (auto const& f : expand_inputs(a.corpus.inputs))
		for (auto& t : tokenize(normalize_delimiters(read_file(f))).tokens)
			if (t.kind == TokenKind::word)
				words.push_back(std::move(t.text));
	if (words.empty())
		throw ConfigError("bench corpus has no word tokens");

	double best = 0;
	std::size_t known = 0;
	for (unsigned r = 0; r < std::max(1u, a.repeat); ++r) {
		known = 0;
		auto const s = clock::now();
		for (auto const& w : words)
			known += !lex.lookup(w, policy).empty();
		std::chrono::duration<double> const dt = clock::now() - s;
		best = std::max(best, double(words.size()) / dt.count());
	}
	std::chrono::duration<double> const load = t1 - t0;
	json j = {{"lexicon_load_seconds", load.count()},
	          {"word_tokens", words.size()},
	          {"known_tokens", known},
	          {"policy", to_string(policy)},
	          {"tokens_per_second", static_cast<std::uint64_t>(best)}};
	std::cout << j.dump(2) << '\n';
	return 0;
}

auto add_corpus_options(CLI::App* cmd, CorpusOptions& o, bool positional)
    -> void
{
	if (positional)
		cmd->add_option("corpus", o.inputs,
		                "Corpus files, directories or glob patterns");
	else
		cmd->add_option("--corpus", o.inputs,
		                "Corpus files, directories or glob patterns");
	cmd->add_option("--abbreviations", o.abbreviations,
	                "Abbreviation list for sentence segmentation");
	cmd->add_option("--replacements", o.replacements,
	                "Two-column TSV of fixed replacements");
	cmd->add_option("--corpus-id", o.corpus_id, "Corpus identifier");
	cmd->add_option("-j,--jobs", o.jobs, "Parallel workers")
	    ->check(CLI::PositiveNumber);
}

} // namespace

auto main(int argc, char** argv) -> int
{
	std::vector<std::string> const args(argv, argv + argc);
	CLI::App app{"Dictionary coverage of text corpora"};
	app.set_version_flag("--version", LEXCOV_VERSION);
	app.require_subcommand(1);

	CompileArgs compile_args;
	auto* compile = app.add_subcommand("compile", "Compile DELAF files");
	compile->add_option("dicts", compile_args.dicts, "DELAF files")
	    ->required();
	compile->add_option("--role", compile_args.role,
	                    "general, abbreviations_acronyms or user");
	compile->add_option("-o,--output", compile_args.output, "Lexicon file")
	    ->required();
	compile->add_flag("--json", compile_args.json, "Print stats as JSON");

	ApplyArgs apply_args;
	auto* apply = app.add_subcommand("apply", "Apply lexicons to a corpus");
	apply->add_option("-l,--lexicon", apply_args.lexicons,
	                  "Lexicon file (repeatable)")
	    ->required()
	    ->allow_extra_args(false);
	add_corpus_options(apply, apply_args.corpus, true);
	apply->add_option("--case-policy", apply_args.policy,
	                  "exact, unitex_like or full_fold");
	apply->add_option("--dict-id", apply_args.dict_id,
	                  "Dictionary identifier for reports");
	apply->add_option("-o,--output", apply_args.output, "Run directory")
	    ->required();

	CoverageArgs coverage_args;
	auto* cov = app.add_subcommand("coverage", "Coverage report");
	cov->add_option("runs", coverage_args.runs,
	                "Run directories (two give a version delta)");
	cov->add_option("--counts", coverage_args.counts,
	                "Replay counts from a TSV file");
	cov->add_option("-l,--lexicon", coverage_args.lexicons,
	                "Lexicon for an inline run (repeatable)")
	    ->allow_extra_args(false);
	add_corpus_options(cov, coverage_args.corpus, false);
	cov->add_option("--case-policy", coverage_args.policy,
	                "Policy for an inline run");
	cov->add_option("--dict-id", coverage_args.dict_id,
	                "Dictionary identifier for an inline run");
	cov->add_option("--format", coverage_args.format, "text or json");
	cov->add_option("--locale", coverage_args.locale, "plain or pt-BR");
	cov->add_flag("--cased", coverage_args.cased, "Keep case in type counts");

	ClassifyArgs classify_args;
	auto* cls = app.add_subcommand("classify", "Classify unknown words");
	cls->add_option("run", classify_args.run, "Run directory");
	cls->add_option("--records", classify_args.records,
	                "Precomputed record TSV instead of a run");
	cls->add_option("-l,--lexicon", classify_args.lexicon, "Current lexicon")
	    ->required();
	cls->add_option("--old-lexicon", classify_args.old_lexicon,
	                "Older lexicon");
	cls->add_option("--config", classify_args.config, "Classifier config");
	cls->add_option("-o,--output", classify_args.output,
	                "Output directory (default: the run directory)");

	DiffArgs diff_args;
	auto* diff = app.add_subcommand("diff", "Compare dictionary form sets");
	diff->add_option("-a", diff_args.a, "First dictionary set")->required();
	diff->add_option("-b", diff_args.b, "Second dictionary set")->required();
	diff->add_flag("--fold", diff_args.fold, "Ignore case");
	diff->add_option("--format", diff_args.format, "text or json");
	diff->add_option("--locale", diff_args.locale, "plain or pt-BR");

	WordListArgs wordlist_args;
	auto* wl = app.add_subcommand("wordlist", "Word types with frequencies");
	add_corpus_options(wl, wordlist_args.corpus, true);
	wl->add_flag("--cased", wordlist_args.cased, "Keep case");
	wl->add_option("-o,--output", wordlist_args.output, "Output TSV");

	BenchArgs bench_args;
	auto* bench = app.add_subcommand("bench", "Lookup throughput");
	bench->add_option("-l,--lexicon", bench_args.lexicons,
	                  "Lexicon file (repeatable)")
	    ->required()
	    ->allow_extra_args(false);
	add_corpus_options(bench, bench_args.corpus, true);
	bench->add_option("--case-policy", bench_args.policy, "Lookup policy");
	bench->add_option("--repeat", bench_args.repeat, "Timed passes");

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e) {
		auto const code = app.exit(e);
		return code == 0 ? 0 : exit_invalid;
	}

	try {
		if (*compile)
			return cmd_compile(compile_args);
		if (*apply)
			return cmd_apply(apply_args, args);
		if (*cov)
			return cmd_coverage(coverage_args);
		if (*cls)
			return cmd_classify(classify_args);
		if (*diff)
			return cmd_diff(diff_args);
		if (*wl)
			return cmd_wordlist(wordlist_args);
		if (*bench)
			return cmd_bench(bench_args);
	}
	catch (const IoError& e) {
		std::cerr << "lexcov: " << e.what() << '\n';
		return exit_io;
	}
	catch (const fs::filesystem_error& e) {
		std::cerr << "lexcov: " << e.what() << '\n';
		return exit_io;
	}
	catch (const Error& e) {
		std::cerr << "lexcov: " << e.what() << '\n';
		return exit_invalid;
	}
	catch (const std::invalid_argument& e) {
		std::cerr << "lexcov: " << e.what() << '\n';
		return exit_invalid;
	}
	catch (const std::exception& e) {
		std::cerr << "lexcov: " << e.what() << '\n';
		return exit_io;
	}
	return 0;
}
