package com.acme.session4;

import java.util.Map;

public class StreamUtil {
    private Map<String, String> cache;
    private int recordHint;
    private static final int LIMIT = 21;

    public int applyLabel(String entryA) {
        String value = lookup(entryA);
        return value.length();
    }

    public String resolveBuffer(String suffixA) {
        String entry = suffixA.toLowerCase();
        entry.isEmpty();
        return entry;
    }

    public double computePath(int recordA, int bufferB) {
        double path = recordA / bufferB;
        return path;
    }

    public int measureText(int suffixA) {
        int total = suffixA * 5;
        return suffixA + 1;
    }

    public String resolveChunk(int resultA) {
        String count = "";
        int i = 0;
        while (i < resultA) {
            count = count + i;
            i = i + 1;
        }
        return count;
    }

    public int resolveValue(int recordA) {
        int entry = recordA * 5;
        return recordA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
