#ifndef AEROSIM_TDMA_HPP
#define AEROSIM_TDMA_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aerosim/traffic.hpp"

namespace aerosim::tdma {

using NodeId = traffic::NodeId;

struct TdmaConfig {
    double slot_duration_s = 0.01;
    int slots_per_frame = 10;
    int retransmission_attempts = 0;

    double frame_duration_s() const { return slot_duration_s * slots_per_frame; }
};

struct BufferReport {
    NodeId node;
    std::uint64_t queued;
};

/// Per-frame slot assignment; nullopt = empty slot.
struct TdmaSchedule {
    std::uint64_t frame_index = 0;
    std::vector<std::optional<NodeId>> assignments;
};

/// Global oracle scheduler: registration, latest buffer report per node,
/// round-robin slot allocation at each frame start. The round-robin pointer
/// persists across frames, continuing after the last node served.
class TdmaScheduler {
public:
    explicit TdmaScheduler(int slots_per_frame);

    void register_node(NodeId node);
    void report_buffer(const BufferReport& report);
    bool is_registered(NodeId node) const;

    /// Allocates slots cyclically over the registry, one per visit, capped by
    /// each node's last reported demand. Unfilled slots stay empty; no slot
    /// stays empty while unserved demand remains.
    TdmaSchedule compute_schedule(std::uint64_t frame_index);

    std::uint64_t total_demand() const { return total_demand_; }

private:
    int slots_per_frame_;
    std::vector<NodeId> registry_;
    std::unordered_map<NodeId, std::size_t> index_of_;
    std::vector<std::uint64_t> demand_; // latest report, by registry index
    std::uint64_t total_demand_ = 0;
    std::size_t next_ = 0; // registry index after the last node served
};

/// MAC-side FIFO queue. Pushes a buffer report to the scheduler on every
/// enqueue and after handing out each frame's transmissions.
class TdmaMac {
public:
    TdmaMac(NodeId node, TdmaScheduler& scheduler);

    void enqueue(traffic::Packet packet);

    /// Transmissions for this node in the given frame: (slot index, packet),
    /// FIFO, at most one packet per assigned slot. Slots assigned beyond the
    /// queue length (stale report) go unused. Lost packets are not re-queued;
    /// retransmission attempts are fixed at zero.
    std::vector<std::pair<int, traffic::Packet>> on_schedule(const TdmaSchedule& schedule);

    std::size_t queued() const { return queue_.size(); }
    NodeId node() const { return node_; }

private:
    NodeId node_;
    TdmaScheduler& scheduler_;
    std::deque<traffic::Packet> queue_;
};

} // namespace aerosim::tdma

#endif
