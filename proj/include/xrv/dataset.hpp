#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "xrv/image.hpp"

namespace xrv {

// Study ordering key: integers compare numerically, anything else (ISO dates)
// lexicographically; numeric keys sort before string keys.
struct OrderKey {
    bool numeric = false;
    int64_t num = 0;
    std::string raw;

    static OrderKey parse(const std::string& s);
    bool operator<(const OrderKey& o) const;
    bool operator==(const OrderKey& o) const { return raw == o.raw; }
};

struct Study {
    std::string patient_id;
    std::string study_id;
    OrderKey order_key;
    std::string pa_path;
    std::optional<std::string> l_path;
    std::set<std::string> labels;
    int source_line = 0; // first manifest line of this study, for diagnostics
};

struct LabelVocabulary {
    std::map<std::string, std::string> hierarchy; // raw label -> top-level label
    std::vector<std::string> retained;            // lexicographic, fixed across runs
    int min_patients = 50;

    int index_of(const std::string& label) const; // -1 when not retained
    std::string hash() const;                     // over the retained list
};

enum class ManifestMode { main, extended };

struct DatasetManifest {
    std::vector<Study> studies;
    ManifestMode mode = ManifestMode::main;
};

enum class Split { train, valid, test };

struct SplitAssignment {
    uint64_t seed = 0;
    std::unordered_map<std::string, Split> assignment; // patient_id -> split
    std::vector<std::string> train, valid, test;       // patient ids in shuffle order
};

// --- label machinery ---------------------------------------------------------

std::set<std::string> map_to_top_level(const std::set<std::string>& labels,
                                       const LabelVocabulary& vocab);

// Fills `retained` with top-level labels carried by >= min_patients distinct
// patients of the manifest, in lexicographic order. Expects mapped labels.
LabelVocabulary filter_labels(const DatasetManifest& manifest, const LabelVocabulary& vocab);

// Distinct-patient count per top-level label (mapped labels expected).
std::map<std::string, int> label_patient_counts(const DatasetManifest& manifest);

// --- study selection and manifest assembly ----------------------------------

// Minimal order_key, ties broken by lexicographically smallest study_id.
Study select_first_study(std::span<const Study> studies);

DatasetManifest build_extended(const DatasetManifest& main,
                               const std::vector<Study>& pa_only_studies);

Eigen_targets_fwd_decl_unused_t* encode_targets_decl_removed();

std::vector<double> encode_targets(const Study& study, const LabelVocabulary& vocab);

SplitAssignment make_split(const DatasetManifest& manifest, uint64_t seed);

// --- manifest / hierarchy files ----------------------------------------------

std::map<std::string, std::string> load_hierarchy(const std::string& path);

struct ManifestIngest {
    DatasetManifest main;              // first paired study per patient
    std::vector<Study> pa_only;        // first PA study of patients without a pair
    int rows = 0;
    int patients_total = 0;
};

// Parses the manifest CSV (patient_id,study_id,order_key,view,image_path,labels),
// maps labels through the hierarchy, applies first-study selection and pairing.
ManifestIngest ingest_manifest(const std::string& manifest_path, const LabelVocabulary& vocab);

void write_manifest_csv(const std::string& path, const DatasetManifest& manifest);

// --- preprocessed cache --------------------------------------------------------

struct CacheEntry {
    std::string study_id;
    std::vector<std::string> views; // "PA" [, "L"]
    int side = 0;
    std::string checksum;
};

std::string cache_file_stem(const std::string& study_id);
CacheEntry write_study_cache(const std::string& dir, const Study& study,
                             const FloatImage& pa, const FloatImage* l);
std::vector<FloatImage> read_study_cache(const std::string& dir, const std::string& study_id,
                                         CacheEntry* entry_out = nullptr);

void save_vocabulary(const std::string& path, const LabelVocabulary& vocab);
LabelVocabulary load_vocabulary(const std::string& path);

} // namespace xrv
