#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fakenews {

enum class Label { Fake, Legitimate };
enum class Domain {
    Technology,
    Business,
    Education,
    Sports,
    Politics,
    Entertainment,
    Celebrity
};
enum class Variant { Original, Paraphrased };

std::string to_string(Label l);
std::string to_string(Domain d);
std::string to_string(Variant v);
Label parse_label(const std::string& s);    // throws InvalidArticle
Domain parse_domain(const std::string& s);  // throws UnknownDomain

// One news text. `id` is the path of the source file relative to the dataset
// root, without extension, so it is stable and unique within a tree.
struct Article {
    std::string id;
    std::string body;
    Label label = Label::Legitimate;
    Domain domain = Domain::Celebrity;
    Variant variant = Variant::Original;
};

struct Dataset {
    std::string name;
    std::vector<Article> articles;  // sorted by id

    // fake/legitimate counts per domain, populated at load.
    std::map<Domain, std::pair<std::size_t, std::size_t>> class_counts;

    std::size_t size() const { return articles.size(); }
    std::size_t count(Label l) const;
    std::set<Domain> domains() const;
    void recount();
};

struct FoldPlan {
    int k = 0;
    std::map<std::string, int> assignments;  // id -> fold in [0, k)
    std::uint64_t seed = 0;
};

// Loads a dataset from one of the two documented layouts:
//   <root>/<legit|fake>/<domain>/<name>.txt   (six-domain trees)
//   <root>/<legit|fake>/<name>.txt            (flat trees; domain=Celebrity)
// The layout is detected from whether the label directories contain
// subdirectories. Bodies are normalized (see text::normalize) and must be
// non-empty after trimming. Articles come back sorted by id.
Dataset load_dataset(const std::filesystem::path& root, const std::string& name);

// Alternative loader: CSV manifest with header id,label,domain,path where
// path is relative to the manifest's directory (or absolute).
Dataset load_manifest(const std::filesystem::path& manifest_csv, const std::string& name);

// Stratified fold assignment. Ids are grouped by class, shuffled with a
// SplitMix64 stream derived from (seed, class index), and dealt round-robin,
// which keeps per-fold class counts within one article of each other.
// Identical (dataset, k, seed) always produces the identical plan.
FoldPlan split_folds(const Dataset& dataset, int k, std::uint64_t seed);

// Keeps articles whose domain is in `keep` (or in its complement when
// invert), preserving order. `keep` must be non-empty.
Dataset filter_domain(const Dataset& dataset, const std::set<Domain>& keep, bool invert);

}  // namespace fakenews
