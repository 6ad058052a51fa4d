#include "fakenews/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fakenews/errors.hpp"
#include "fakenews/prng.hpp"
#include "fakenews/text.hpp"

namespace fs = std::filesystem;

namespace fakenews {

std::string to_string(Label l) { return l == Label::Fake ? "fake" : "legitimate"; }

std::string to_string(Domain d) {
    switch (d) {
        case Domain::Technology: return "technology";
        case Domain::Business: return "business";
        case Domain::Education: return "education";
        case Domain::Sports: return "sports";
        case Domain::Politics: return "politics";
        case Domain::Entertainment: return "entertainment";
        case Domain::Celebrity: return "celebrity";
    }
    return "?";
}

std::string to_string(Variant v) {
    return v == Variant::Original ? "original" : "paraphrased";
}

Label parse_label(const std::string& s) {
    std::string t = text::lower_ascii(s);
    if (t == "fake") return Label::Fake;
    if (t == "legit" || t == "legitimate") return Label::Legitimate;
    throw InvalidArticle("unknown label: " + s);
}

Domain parse_domain(const std::string& s) {
    std::string t = text::lower_ascii(s);
    for (Domain d : {Domain::Technology, Domain::Business, Domain::Education,
                     Domain::Sports, Domain::Politics, Domain::Entertainment,
                     Domain::Celebrity}) {
        if (t == to_string(d)) return d;
    }
    throw UnknownDomain("unknown domain: " + s);
}

std::size_t Dataset::count(Label l) const {
    return static_cast<std::size_t>(
        std::count_if(articles.begin(), articles.end(),
                      [l](const Article& a) { return a.label == l; }));
}

std::set<Domain> Dataset::domains() const {
    std::set<Domain> out;
    for (const Article& a : articles) out.insert(a.domain);
    return out;
}

void Dataset::recount() {
    class_counts.clear();
    for (const Article& a : articles) {
        auto& pair = class_counts[a.domain];
        if (a.label == Label::Fake) {
            ++pair.first;
        } else {
            ++pair.second;
        }
    }
}

namespace {

std::string read_body(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw UnreadableFile("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw UnreadableFile("read failed on " + file.string());
    return text::normalize(buf.str());
}

std::string relative_id(const fs::path& file, const fs::path& root) {
    fs::path rel = fs::relative(file, root);
    rel.replace_extension();
    return rel.generic_string();
}

void finish(Dataset& ds) {
    if (ds.articles.empty()) throw EmptyDataset("dataset '" + ds.name + "' has no articles");
    std::sort(ds.articles.begin(), ds.articles.end(),
              [](const Article& a, const Article& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < ds.articles.size(); ++i) {
        if (ds.articles[i].id == ds.articles[i - 1].id) {
            throw InvalidArticle("duplicate article id: " + ds.articles[i].id);
        }
    }
    ds.recount();
}

void load_article(Dataset& ds, const fs::path& file, const fs::path& root,
                  Label label, Domain domain) {
    Article a;
    a.id = relative_id(file, root);
    a.body = read_body(file);
    if (text::trim(a.body).empty()) {
        throw InvalidArticle("empty article body: " + file.string());
    }
    a.label = label;
    a.domain = domain;
    a.variant = Variant::Original;
    ds.articles.push_back(std::move(a));
}

}  // namespace

Dataset load_dataset(const fs::path& root, const std::string& name) {
    if (!fs::is_directory(root)) {
        throw MissingDirectory("dataset root not found: " + root.string());
    }
    Dataset ds;
    ds.name = name;
    for (const char* label_dir : {"fake", "legit"}) {
        fs::path ldir = root / label_dir;
        if (!fs::is_directory(ldir)) continue;
        Label label = parse_label(label_dir);
        // Two layouts: domain subdirectories, or .txt files directly under
        // the label directory (flat trees are Celebrity-style).
        std::vector<fs::path> entries;
        for (const auto& e : fs::directory_iterator(ldir)) entries.push_back(e.path());
        std::sort(entries.begin(), entries.end());
        for (const fs::path& entry : entries) {
            if (fs::is_directory(entry)) {
                Domain domain = parse_domain(entry.filename().string());
                std::vector<fs::path> files;
                for (const auto& f : fs::directory_iterator(entry)) {
                    if (f.path().extension() == ".txt") files.push_back(f.path());
                }
                std::sort(files.begin(), files.end());
                for (const fs::path& f : files) load_article(ds, f, root, label, domain);
            } else if (entry.extension() == ".txt") {
                load_article(ds, entry, root, label, Domain::Celebrity);
            }
        }
    }
    finish(ds);
    return ds;
}

Dataset load_manifest(const fs::path& manifest_csv, const std::string& name) {
    std::ifstream in(manifest_csv);
    if (!in) throw UnreadableFile("cannot open " + manifest_csv.string());
    Dataset ds;
    ds.name = name;
    fs::path base = manifest_csv.parent_path();
    std::string line;
    if (!std::getline(in, line)) throw EmptyDataset("empty manifest: " + manifest_csv.string());
    if (text::trim(line) != std::string_view("id,label,domain,path")) {
        throw SchemaMismatch("manifest header must be id,label,domain,path, got: " + line);
    }
    while (std::getline(in, line)) {
        std::string_view row = text::trim(line);
        if (row.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss{std::string(row)};
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        if (cols.size() != 4) throw SchemaMismatch("manifest row needs 4 columns: " + line);
        Article a;
        a.id = cols[0];
        a.label = parse_label(cols[1]);
        a.domain = parse_domain(cols[2]);
        fs::path p = cols[3];
        if (p.is_relative()) p = base / p;
        a.body = read_body(p);
        if (text::trim(a.body).empty()) throw InvalidArticle("empty article body: " + p.string());
        ds.articles.push_back(std::move(a));
    }
    finish(ds);
    return ds;
}

FoldPlan split_folds(const Dataset& dataset, int k, std::uint64_t seed) {
    if (k < 2) throw BadFoldCount("fold count must be >= 2, got " + std::to_string(k));
    std::size_t n_fake = dataset.count(Label::Fake);
    std::size_t n_legit = dataset.size() - n_fake;
    std::size_t min_class = std::min(n_fake, n_legit);
    if (static_cast<std::size_t>(k) > min_class) {
        throw BadFoldCount("fold count " + std::to_string(k) +
                           " exceeds smallest class size " + std::to_string(min_class));
    }
    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    int class_index = 0;
    for (Label cls : {Label::Fake, Label::Legitimate}) {
        std::vector<std::string> ids;
        for (const Article& a : dataset.articles) {
            if (a.label == cls) ids.push_back(a.id);
        }
        std::sort(ids.begin(), ids.end());
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(class_index)));
        rng.shuffle(ids);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            plan.assignments[ids[i]] = static_cast<int>(i % static_cast<std::size_t>(k));
        }
        ++class_index;
    }
    return plan;
}

Dataset filter_domain(const Dataset& dataset, const std::set<Domain>& keep, bool invert) {
    if (keep.empty()) throw UnknownDomain("domain filter set is empty");
    Dataset out;
    out.name = dataset.name;
    for (const Article& a : dataset.articles) {
        bool in_keep = keep.count(a.domain) > 0;
        if (in_keep != invert) out.articles.push_back(a);
    }
    out.recount();
    return out;
}

}  // namespace fakenews
