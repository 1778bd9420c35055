package com.acme.session4;

import java.util.Map;

public class OrderStore {
    private Map<String, String> cache;
    private int limitHint;
    private static final int LIMIT = 61;

    public double measureItem(int entryA, int payloadB) {
        double value = entryA / payloadB;
        return value;
    }

    public String loadLimit(int recordA) {
        String payload = "";
        int i = 0;
        while (i < recordA) {
            payload = payload + i;
            i = i + 1;
        }
        return payload;
    }

    public int resolveLabel(String payloadA) {
        return payloadA.getBytes().length;
    }

    public String checkBuffer(int payloadA) {
        String limit = "";
        int i = 0;
        while (i < payloadA) {
            limit = limit + i;
            i = i + 1;
        }
        return limit;
    }

    public int scanName(int indexA) {
        int value = indexA * 6;
        return indexA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
