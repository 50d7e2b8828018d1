#include "rootoidlab/setalg.hpp"

#include <algorithm>
#include <map>

namespace rootoidlab {

GroundSet::GroundSet(std::string id, std::vector<std::string> labels)
    : id_(std::move(id)), labels_(std::move(labels)) {
    for (size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!inserted)
            throw std::invalid_argument("ground set '" + id_ + "': duplicate label '" + labels_[i] + "'");
    }
}

int GroundSet::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("ground set '" + id_ + "': unknown label '" + label + "'");
    return it->second;
}

int GroundSet::find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

bool GroundSet::same_as(const GroundSet& other) const {
    return this == &other || (id_ == other.id_ && labels_ == other.labels_);
}

GroundPtr make_ground(std::string id, std::vector<std::string> labels) {
    return std::make_shared<const GroundSet>(std::move(id), std::move(labels));
}

SetElem::SetElem(GroundPtr ground)
    : ground_(std::move(ground)), bits_(static_cast<size_t>(ground_->size())) {}

SetElem::SetElem(GroundPtr ground, const std::vector<std::string>& members) : SetElem(std::move(ground)) {
    for (const auto& m : members) bits_.set(static_cast<size_t>(ground_->index(m)));
}

SetElem SetElem::full(GroundPtr ground) {
    SetElem e(std::move(ground));
    e.bits_.set();
    return e;
}

bool SetElem::has(const std::string& label) const {
    int i = ground_->find(label);
    return i >= 0 && bits_.test(static_cast<size_t>(i));
}

SetElem& SetElem::set(int i, bool value) {
    bits_.set(static_cast<size_t>(i), value);
    return *this;
}

void SetElem::require_same_ring(const SetElem& other) const {
    if (ground_ == other.ground_) return;
    if (!ground_->same_as(*other.ground_))
        throw RingMismatch("incompatible rings: ground '" + ground_->id() + "' vs '" +
                           other.ground_->id() + "'");
}

SetElem SetElem::operator+(const SetElem& other) const {
    require_same_ring(other);
    SetElem r(*this);
    r.bits_ ^= other.bits_;
    return r;
}

SetElem SetElem::operator&(const SetElem& other) const {
    require_same_ring(other);
    SetElem r(*this);
    r.bits_ &= other.bits_;
    return r;
}

SetElem SetElem::unite(const SetElem& other) const {
    require_same_ring(other);
    SetElem r(*this);
    r.bits_ |= other.bits_;
    return r;
}

SetElem SetElem::minus(const SetElem& other) const {
    require_same_ring(other);
    SetElem r(*this);
    r.bits_ -= other.bits_;
    return r;
}

bool SetElem::subset_of(const SetElem& other) const {
    require_same_ring(other);
    return bits_.is_subset_of(other.bits_);
}

bool SetElem::operator==(const SetElem& other) const {
    require_same_ring(other);
    return bits_ == other.bits_;
}

bool SetElem::before(const SetElem& other) const {
    require_same_ring(other);
    if (bits_.count() != other.bits_.count()) return bits_.count() < other.bits_.count();
    if (bits_ == other.bits_) return false;
    return bits_ < other.bits_;
}

std::vector<std::string> SetElem::members() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_.test(i)) out.push_back(ground_->label(static_cast<int>(i)));
    return out;
}

std::string SetElem::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& m : members()) {
        if (!first) s += ",";
        s += m;
        first = false;
    }
    return s + "}";
}

bool SubringPartition::contains(const SetElem& x) const {
    if (!x.subset_of(support)) return false;
    for (const auto& b : blocks) {
        SetElem inter = x & b;
        if (!inter.empty() && inter != b) return false;
    }
    return true;
}

int SubringPartition::rank_of(const SetElem& x) const {
    if (!contains(x))
        throw std::invalid_argument("rank_of: element " + x.to_string() + " not in subring");
    int n = 0;
    for (const auto& b : blocks)
        if (b.subset_of(x)) ++n;
    return n;
}

std::vector<int> SubringPartition::block_indices(const SetElem& x) const {
    if (!contains(x))
        throw std::invalid_argument("block_indices: element not in subring");
    std::vector<int> out;
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].subset_of(x)) out.push_back(static_cast<int>(i));
    return out;
}

int SubringPartition::block_of_point(int point) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].has(point)) return static_cast<int>(i);
    return -1;
}

bool SubringPartition::same_as(const SubringPartition& other) const {
    if (support != other.support || blocks.size() != other.blocks.size()) return false;
    for (const auto& b : blocks) {
        bool found = false;
        for (const auto& c : other.blocks)
            if (b == c) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

SubringPartition generated_subring(const GroundPtr& ground, const std::vector<SetElem>& gens) {
    SetElem support(ground);
    for (const auto& g : gens) support = support.unite(g);

    // Group support points by membership signature across the generators.
    std::map<std::vector<bool>, SetElem> classes;
    for (int i = 0; i < ground->size(); ++i) {
        if (!support.has(i)) continue;
        std::vector<bool> sig;
        sig.reserve(gens.size());
        for (const auto& g : gens) sig.push_back(g.has(i));
        auto it = classes.find(sig);
        if (it == classes.end()) it = classes.emplace(sig, SetElem(ground)).first;
        it->second.set(i);
    }
    SubringPartition part{support, {}};
    for (auto& [sig, block] : classes) part.blocks.push_back(block);
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const SetElem& a, const SetElem& b) { return a.before(b); });
    return part;
}

PartialMap PartialMap::identity(const GroundPtr& ground) {
    PartialMap pm{ground, ground, std::vector<int>(static_cast<size_t>(ground->size()))};
    for (int i = 0; i < ground->size(); ++i) pm.map[static_cast<size_t>(i)] = i;
    return pm;
}

PartialMap PartialMap::total(const GroundPtr& source, const GroundPtr& target,
                             const std::vector<std::pair<std::string, std::string>>& entries) {
    PartialMap pm{source, target, std::vector<int>(static_cast<size_t>(source->size()), -1)};
    for (const auto& [y, x] : entries) pm.map[static_cast<size_t>(source->index(y))] = target->index(x);
    return pm;
}

SetElem PartialMap::apply(const SetElem& a) const {
    if (!a.ground()->same_as(*target))
        throw RingMismatch("apply_hom: element over '" + a.ground()->id() +
                           "' but homomorphism domain ring has ground '" + target->id() + "'");
    SetElem r(source);
    for (size_t y = 0; y < map.size(); ++y)
        if (map[y] >= 0 && a.has(map[y])) r.set(static_cast<int>(y));
    return r;
}

bool PartialMap::is_total() const {
    for (int v : map)
        if (v < 0) return false;
    return true;
}

bool PartialMap::is_bijective() const {
    if (source->size() != target->size()) return false;
    std::vector<bool> hit(map.size(), false);
    for (int v : map) {
        if (v < 0 || hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = true;
    }
    return true;
}

void PartialMap::validate() const {
    if (static_cast<int>(map.size()) != source->size())
        throw std::invalid_argument("partial map: size mismatch with source ground");
    for (int v : map)
        if (v < -1 || v >= target->size())
            throw std::invalid_argument("partial map: entry outside target ground");
}

}  // namespace rootoidlab
