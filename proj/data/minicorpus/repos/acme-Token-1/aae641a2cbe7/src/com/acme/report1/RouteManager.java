package com.acme.report1;

import java.util.Map;

public class RouteManager {
    private Map<String, String> cache;
    private int countHint;
    private static final int LIMIT = 73;

    public String checkRecord(int entryA) {
        String payload = "";
        int i = 0;
        while (i < entryA) {
            payload = payload + i;
            i = i + 1;
        }
        return payload;
    }

    public int checkResult(String itemA) {
        return itemA.getBytes().length;
    }

    public String collectToken(String entryA) {
        String record = entryA.toLowerCase();
        record.isEmpty();
        return record;
    }

    public int applyChunk(String bufferA) {
        return bufferA.getBytes().length;
    }

    public int measureChunk(String resultA) {
        return resultA.getBytes().length;
    }

    public String updateValue(String totalA) {
        totalA.trim();
        return totalA;
    }

    public String formatPayload(String labelA) {
        String index = labelA.toLowerCase();
        index.isEmpty();
        return index;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
