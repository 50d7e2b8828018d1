#ifndef ROOTOIDLAB_SETALG_HPP
#define ROOTOIDLAB_SETALG_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace rootoidlab {

struct RingMismatch : std::invalid_argument {
    explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Finite set of atom labels. Label order is fixed at construction and
// assigns bit indices; serialization elsewhere sorts labels for output.
class GroundSet {
  public:
    GroundSet(std::string id, std::vector<std::string> labels);

    const std::string& id() const { return id_; }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
    int index(const std::string& label) const;  // throws on unknown label
    int find(const std::string& label) const;   // -1 on unknown label

    bool same_as(const GroundSet& other) const;  // content equality

  private:
    std::string id_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

GroundPtr make_ground(std::string id, std::vector<std::string> labels);

// Element of the power-set Boolean ring over a ground set.
// + is symmetric difference, & is intersection, unite() is a+b+ab.
class SetElem {
  public:
    explicit SetElem(GroundPtr ground);
    SetElem(GroundPtr ground, const std::vector<std::string>& members);
    static SetElem full(GroundPtr ground);

    const GroundPtr& ground() const { return ground_; }
    const boost::dynamic_bitset<>& bits() const { return bits_; }

    bool has(int i) const { return bits_.test(static_cast<size_t>(i)); }
    bool has(const std::string& label) const;
    SetElem& set(int i, bool value = true);

    int rank() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    SetElem operator+(const SetElem& other) const;  // symmetric difference
    SetElem operator&(const SetElem& other) const;  // intersection
    SetElem unite(const SetElem& other) const;      // a+b+ab
    SetElem minus(const SetElem& other) const;      // a & ~b
    bool subset_of(const SetElem& other) const;

    bool operator==(const SetElem& other) const;
    bool operator!=(const SetElem& other) const { return !(*this == other); }

    // Deterministic total order (rank, then reverse-lex on bits); used to
    // canonically sort weak-order elements and serialized collections.
    bool before(const SetElem& other) const;

    std::vector<std::string> members() const;
    std::string to_string() const;

  private:
    void require_same_ring(const SetElem& other) const;

    GroundPtr ground_;
    boost::dynamic_bitset<> bits_;
};

// A finite subring of a power-set ring: the unions of blocks of a
// partition of a subset of the ground. Blocks are the subring's atoms.
struct SubringPartition {
    SetElem support;
    std::vector<SetElem> blocks;  // disjoint, nonempty, union = support

    bool contains(const SetElem& x) const;  // x is a union of blocks
    int rank_of(const SetElem& x) const;    // number of blocks inside x
    std::vector<int> block_indices(const SetElem& x) const;
    int block_of_point(int point) const;    // -1 if outside support
    bool same_as(const SubringPartition& other) const;
};

// Smallest subring of the power set over `ground` containing all of `gens`:
// support is the union, blocks are classes of equal membership signature.
SubringPartition generated_subring(const GroundPtr& ground, const std::vector<SetElem>& gens);

// Partial map between ground sets encoding a (possibly non-unital) ring
// homomorphism from the power set over `target` to the power set over
// `source`, by preimage: A -> { y : map(y) defined and map(y) in A }.
struct PartialMap {
    GroundPtr source;      // Y, ground of the codomain ring
    GroundPtr target;      // X, ground of the domain ring
    std::vector<int> map;  // size |Y|; index into X or -1 when undefined

    static PartialMap identity(const GroundPtr& ground);
    static PartialMap total(const GroundPtr& source, const GroundPtr& target,
                            const std::vector<std::pair<std::string, std::string>>& entries);

    SetElem apply(const SetElem& a) const;  // a over X -> result over Y
    bool is_total() const;
    bool is_bijective() const;
    void validate() const;
};

}  // namespace rootoidlab

#endif
