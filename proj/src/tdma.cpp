#include "aerosim/tdma.hpp"

#include <stdexcept>
#include <string>

namespace aerosim::tdma {

TdmaScheduler::TdmaScheduler(int slots_per_frame) : slots_per_frame_(slots_per_frame) {
    if (slots_per_frame < 1)
        throw std::invalid_argument("TdmaScheduler: slots_per_frame must be >= 1");
}

void TdmaScheduler::register_node(NodeId node) {
    if (index_of_.contains(node))
        throw std::logic_error("TdmaScheduler: duplicate registration of node " +
                               std::to_string(node));
    index_of_[node] = registry_.size();
    registry_.push_back(node);
    demand_.push_back(0);
}

bool TdmaScheduler::is_registered(NodeId node) const { return index_of_.contains(node); }

void TdmaScheduler::report_buffer(const BufferReport& report) {
    auto it = index_of_.find(report.node);
    if (it == index_of_.end())
        throw std::logic_error("TdmaScheduler: buffer report from unregistered node " +
                               std::to_string(report.node));
    total_demand_ += report.queued - demand_[it->second];
    demand_[it->second] = report.queued; // latest report wins
}

TdmaSchedule TdmaScheduler::compute_schedule(std::uint64_t frame_index) {
    TdmaSchedule schedule;
    schedule.frame_index = frame_index;
    schedule.assignments.assign(static_cast<std::size_t>(slots_per_frame_), std::nullopt);
    if (registry_.empty() || total_demand_ == 0)
        return schedule;

    std::vector<std::uint64_t> remaining = demand_; // working copy; reports stay untouched
    const std::size_t k = registry_.size();
    std::size_t cursor = next_;
    for (int slot = 0; slot < slots_per_frame_; ++slot) {
        bool served = false;
        for (std::size_t probe = 0; probe < k; ++probe) {
            const std::size_t idx = (cursor + probe) % k;
            if (remaining[idx] > 0) {
                schedule.assignments[static_cast<std::size_t>(slot)] = registry_[idx];
                --remaining[idx];
                cursor = (idx + 1) % k;
                served = true;
                break;
            }
        }
        if (!served) break; // demand exhausted; the rest of the frame stays empty
    }
    next_ = cursor;
    return schedule;
}

TdmaMac::TdmaMac(NodeId node, TdmaScheduler& scheduler) : node_(node), scheduler_(scheduler) {
    scheduler_.register_node(node);
}

void TdmaMac::enqueue(traffic::Packet packet) {
    queue_.push_back(std::move(packet));
    scheduler_.report_buffer(BufferReport{node_, queue_.size()});
}

std::vector<std::pair<int, traffic::Packet>> TdmaMac::on_schedule(const TdmaSchedule& schedule) {
    std::vector<std::pair<int, traffic::Packet>> out;
    for (std::size_t slot = 0; slot < schedule.assignments.size(); ++slot) {
        if (schedule.assignments[slot] != node_) continue;
        if (queue_.empty()) continue; // stale report; the slot idles
        out.emplace_back(static_cast<int>(slot), std::move(queue_.front()));
        queue_.pop_front();
    }
    scheduler_.report_buffer(BufferReport{node_, queue_.size()});
    return out;
}

} // namespace aerosim::tdma
