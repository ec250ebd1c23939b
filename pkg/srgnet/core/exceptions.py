# ------------------------------------------------------------------------------------------------
# License
# ------------------------------------------------------------------------------------------------

# Copyright (c) 2025 LSeu-Open
# 
# This code is licensed under the MIT License.
# See LICENSE file in the root directory

# ------------------------------------------------------------------------------------------------
# Description
# ------------------------------------------------------------------------------------------------

"""
Custom exceptions for the SRG network analysis toolkit.

This module defines a hierarchy of exception classes to provide
more detailed error information and better error handling. Every class carries
a stable ``code`` that the command-line interface prints on failure.
"""

# ------------------------------------------------------------------------------------------------
# Exceptions
# ------------------------------------------------------------------------------------------------

class SrgNetError(Exception):
    """Base exception for all toolkit errors"""
    code = "SrgNetError"

# Graph representation

class GraphError(SrgNetError):
    """Raised when a graph cannot be used as requested"""
    code = "GraphError"

class InvalidGraphError(GraphError):
    """Raised when an adjacency matrix is not symmetric, 0/1 and loopless"""
    code = "InvalidGraph"

class DisconnectedGraphError(GraphError):
    """Raised when a connected graph is required"""
    code = "Disconnected"

class RootOutOfRangeError(GraphError):
    """Raised when a reference vertex does not exist"""
    code = "RootOutOfRange"

# SRG verification

class SrgVerificationError(SrgNetError):
    """Raised when a graph is not strongly regular"""
    code = "SrgVerificationError"

class NotRegularError(SrgVerificationError):
    """Raised when vertex degrees differ"""
    code = "NotRegular"

class NotStronglyRegularError(SrgVerificationError):
    """Raised when lambda or mu is not constant"""
    code = "NotStronglyRegular"

class DegenerateGraphError(SrgVerificationError):
    """Raised for complete or edgeless graphs"""
    code = "Degenerate"

class InfeasibleParametersError(SrgVerificationError):
    """Raised when (n, kappa, lambda, mu) violate the feasibility conditions"""
    code = "InfeasibleParameters"

# graph6 codec

class Graph6Error(SrgNetError):
    """Raised when a graph6 line cannot be decoded"""
    code = "Graph6Error"

class MalformedHeaderError(Graph6Error):
    """Raised when the vertex-count header is invalid"""
    code = "MalformedHeader"

class TruncatedBitstreamError(Graph6Error):
    """Raised when the data bytes do not match the header's vertex count"""
    code = "TruncatedBitstream"

class NonCanonicalPaddingError(Graph6Error):
    """Raised when padding bits are not zero"""
    code = "NonCanonicalPadding"

# Family generators

class FamilyError(SrgNetError):
    """Raised when a family instance cannot be generated"""
    code = "FamilyError"

class SizeTooSmallError(FamilyError):
    """Raised when family size constraints are violated"""
    code = "SizeTooSmall"

class UnsupportedFamilyError(FamilyError):
    """Raised when an operation has no formulas for a family"""
    code = "UnsupportedFamily"

# Stratification

class StratificationError(SrgNetError):
    """Raised when the stratification-basis reduction fails"""
    code = "StratificationError"

class NotThreeStrataError(StratificationError):
    """Raised when a distance partition does not have exactly three strata"""
    code = "NotThreeStrata"

class BlockSumViolationError(StratificationError):
    """Raised when an extracted block breaks one of the SRG block identities"""
    code = "BlockSumViolation"

class JointDiagonalizationError(StratificationError):
    """Raised when the projected blocks cannot be diagonalized together"""
    code = "JointDiagonalizationFailure"

class NegativeDiscriminantError(StratificationError):
    """Raised when no paired block is consistent with a given lambda12"""
    code = "NegativeDiscriminant"

# Entanglement

class EntanglementError(SrgNetError):
    """Raised when an entanglement computation is ill-posed"""
    code = "EntanglementError"

class CouplingDomainError(EntanglementError):
    """Raised for a negative coupling strength"""
    code = "CouplingDomain"

class SingularBlockError(EntanglementError):
    """Raised when the eliminated block of a Schur complement is not invertible"""
    code = "SingularBlock"

class DOutOfRangeError(EntanglementError):
    """Raised when a Schmidt number lies outside [0, 1)"""
    code = "DOutOfRange"

class EmptyOrFullSubsetError(EntanglementError):
    """Raised when a bipartition side is empty or the whole vertex set"""
    code = "EmptyOrFullSubset"

class GridTooCoarseError(EntanglementError):
    """Raised when the Mehler grid does not resolve the Schmidt spectrum"""
    code = "GridTooCoarse"

class CaseMismatchError(EntanglementError):
    """Raised when an area-law branch does not apply to the parameters"""
    code = "CaseMismatch"

class OutOfRegimeWarning(UserWarning):
    """Issued when a large-coupling asymptote is evaluated outside its regime"""

# Signatures

class SignatureError(SrgNetError):
    """Raised when A12 signatures cannot be compared"""
    code = "SignatureError"

class MixedParametersError(SignatureError):
    """Raised when a catalog mixes SRG parameter sets"""
    code = "MixedParameters"
