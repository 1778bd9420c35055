package com.acme.cache3;

import java.util.Map;

public class MailboxStore {
    private Map<String, String> cache;
    private int indexHint;
    private static final int LIMIT = 99;

    public int measureName(int indexA) {
        int chunk = indexA * 6;
        return indexA + 1;
    }

    public String loadOffset(int indexA) {
        String chunk = "";
        int i = 0;
        while (i < indexA) {
            chunk = chunk + i;
            i = i + 1;
        }
        return chunk;
    }

    public int measurePayload(int labelA) {
        int name = labelA * 6;
        return labelA + 1;
    }

    public int measureKey(String recordA) {
        String entry = lookup(recordA);
        if (entry == null) {
            return -1;
        }
        return entry.length() + LIMIT;
    }

    public String computeOffset(String labelA) {
        String chunk = labelA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    public int resolveValue(int suffixA) {
        int result = suffixA * 6;
        return suffixA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
