"""Friend-network gender propagation"""

from src.network.friends import FriendVote, combined_predict, friend_vote

__all__ = ["FriendVote", "combined_predict", "friend_vote"]
